#pragma once

#include <string>

#include "json.hpp"

#include "truncdet/census.hpp"
#include "truncdet/groebner.hpp"
#include "truncdet/ideal.hpp"
#include "truncdet/points.hpp"
#include "truncdet/stanley.hpp"

namespace truncdet {

/// All reports use insertion-ordered JSON so repeated runs are
/// byte-identical. Arbitrary-precision integers (counts, Hilbert values,
/// f-vector entries, degrees) are emitted as decimal strings; small
/// structural numbers (shape parameters, codimensions) as JSON numbers.
using OrderedJson = nlohmann::ordered_json;

OrderedJson shape_json(const MatrixShape& shape);
OrderedJson ideal_json(const GeneratorSet& gens);

/// Generator file: per generator a `# rows=.. cols=.. w=..` comment line
/// followed by the polynomial in the textual format.
std::string ideal_text(const GeneratorSet& gens);
GeneratorSet parse_ideal_text(const std::string& text, FieldRef field = FieldRef::rationals());

OrderedJson gb_report_json(const GBReport& report);
OrderedJson hilbert_json(int m, int k, int max_degree);
OrderedJson census_json(const ComponentReport& report);
OrderedJson count_json(const CountResult& result);

/// Map "x[i,j,l]" -> value string, one entry per variable of the grid.
OrderedJson point_json(const PointAssignment& pt);
OrderedJson separation_json(const SeparationWitness& wit);
OrderedJson intersection_json(const IntersectionWitness& wit);
OrderedJson lift_json(const PointAssignment& base, const PointAssignment& lifted, bool base_member,
                      bool lifted_member);

/// 2-space indented dump with a trailing newline.
std::string dump_json(const OrderedJson& j);

} // namespace truncdet
