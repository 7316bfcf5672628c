// End-to-end tests: run the truncdet binary, check exit codes, byte-level
// determinism, frozen outputs, and validate every JSON report against the
// published schema files. Invoked as: cli_tests <truncdet-binary> <schema-dir>.
#define DOCTEST_CONFIG_IMPLEMENT
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "truncdet/report_json.hpp"

using nlohmann::json;

namespace {

std::string g_binary;
std::string g_schema_dir;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = g_binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), out};
}

json load_schema(const std::string& name) {
  std::ifstream in(g_schema_dir + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing schema file " << name);
  return json::parse(in);
}

// Structural validator for the subset of JSON Schema the published files
// use: type, enum, const, minimum, pattern, required, properties,
// additionalProperties, items, minItems, oneOf, $ref into #/definitions.

bool type_matches(const json& value, const std::string& t) {
  if (t == "object") return value.is_object();
  if (t == "array") return value.is_array();
  if (t == "string") return value.is_string();
  if (t == "integer") return value.is_number_integer();
  if (t == "number") return value.is_number();
  if (t == "boolean") return value.is_boolean();
  if (t == "null") return value.is_null();
  return false;
}

const json& resolve_ref(const json& root, const json& schema) {
  if (!schema.is_object() || !schema.contains("$ref")) return schema;
  const std::string ref = schema["$ref"].get<std::string>();
  REQUIRE_MESSAGE(ref.rfind("#/", 0) == 0, "unsupported $ref " << ref);
  const json* cur = &root;
  std::size_t pos = 2;
  while (pos < ref.size()) {
    const std::size_t slash = ref.find('/', pos);
    const std::string key =
        slash == std::string::npos ? ref.substr(pos) : ref.substr(pos, slash - pos);
    cur = &cur->at(key);
    pos = slash == std::string::npos ? ref.size() : slash + 1;
  }
  return *cur;
}

void validate(const json& root, const json& schema_in, const json& value,
              const std::string& where, std::vector<std::string>& errors) {
  const json& schema = resolve_ref(root, schema_in);

  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) ok = type_matches(value, t.get<std::string>());
    else
      for (const json& alt : t) ok = ok || type_matches(value, alt.get<std::string>());
    if (!ok) {
      errors.push_back(where + ": type mismatch, got " + value.dump());
      return;
    }
  }
  if (schema.contains("const") && value != schema["const"])
    errors.push_back(where + ": expected const " + schema["const"].dump());
  if (schema.contains("enum")) {
    bool ok = false;
    for (const json& alt : schema["enum"]) ok = ok || value == alt;
    if (!ok) errors.push_back(where + ": " + value.dump() + " not in enum");
  }
  if (schema.contains("minimum") && value.is_number() &&
      value.get<double>() < schema["minimum"].get<double>())
    errors.push_back(where + ": " + value.dump() + " below minimum");
  if (schema.contains("pattern") && value.is_string() &&
      !std::regex_search(value.get<std::string>(), std::regex(schema["pattern"].get<std::string>())))
    errors.push_back(where + ": " + value.dump() + " does not match " +
                     schema["pattern"].get<std::string>());

  if (schema.contains("oneOf")) {
    int matched = 0;
    for (const json& branch : schema["oneOf"]) {
      std::vector<std::string> branch_errors;
      validate(root, branch, value, where, branch_errors);
      if (branch_errors.empty()) ++matched;
    }
    if (matched != 1)
      errors.push_back(where + ": " + std::to_string(matched) + " oneOf branches matched");
  }

  if (value.is_object()) {
    if (schema.contains("required"))
      for (const json& key : schema["required"])
        if (!value.contains(key.get<std::string>()))
          errors.push_back(where + ": missing required key " + key.dump());
    const json props = schema.value("properties", json::object());
    for (const auto& [key, sub] : value.items()) {
      if (props.contains(key)) {
        validate(root, props[key], sub, where + "." + key, errors);
      } else if (schema.contains("additionalProperties")) {
        const json& extra = schema["additionalProperties"];
        if (extra.is_boolean() && !extra.get<bool>())
          errors.push_back(where + ": unexpected key " + key);
        else if (extra.is_object())
          validate(root, extra, sub, where + "." + key, errors);
      }
    }
  }

  if (value.is_array()) {
    if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>())
      errors.push_back(where + ": fewer than minItems elements");
    if (schema.contains("items"))
      for (std::size_t i = 0; i < value.size(); ++i)
        validate(root, schema["items"], value[i], where + "[" + std::to_string(i) + "]", errors);
  }
}

void check_schema(const json& doc, const std::string& schema_file) {
  const json schema = load_schema(schema_file);
  std::vector<std::string> errors;
  validate(schema, schema, doc, "$", errors);
  for (const std::string& e : errors) FAIL_CHECK(schema_file << ": " << e);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("ideal export is frozen and deterministic") {
  const RunResult a = run_cli("ideal --m 2 --n 2 --r 2 --k 1");
  CHECK(a.exit_code == 0);
  CHECK(a.out == "# rows=1,2 cols=1,2 w=0\n-x[1,2,0]*x[2,1,0] + x[1,1,0]*x[2,2,0]\n");

  const RunResult b = run_cli("ideal --m 1 --n 2 --r 1 --k 2");
  CHECK(b.exit_code == 0);
  CHECK(b.out ==
        "# rows=1 cols=1 w=0\nx[1,1,0]\n"
        "# rows=1 cols=1 w=1\nx[1,1,1]\n"
        "# rows=1 cols=2 w=0\nx[1,2,0]\n"
        "# rows=1 cols=2 w=1\nx[1,2,1]\n");

  const RunResult c1 = run_cli("ideal --m 2 --n 3 --r 2 --k 2 --format json");
  const RunResult c2 = run_cli("ideal --m 2 --n 3 --r 2 --k 2 --format json");
  CHECK(c1.exit_code == 0);
  CHECK(c1.out == c2.out);
  const json doc = json::parse(c1.out);
  check_schema(doc, "ideal.schema.json");
  CHECK(doc["generator_count"] == 6);
  CHECK(doc["generators"].size() == 6);
}

TEST_CASE("exported text round-trips through the parser") {
  using namespace truncdet;
  const RunResult res = run_cli("ideal --m 2 --n 3 --r 2 --k 2");
  CHECK(res.exit_code == 0);
  const GeneratorSet parsed = parse_ideal_text(res.out);
  const GeneratorSet direct = generate_ideal(MatrixShape{2, 3, 2, 2});
  CHECK(parsed.shape == direct.shape);
  REQUIRE(parsed.gens.size() == direct.gens.size());
  for (std::size_t i = 0; i < parsed.gens.size(); ++i) {
    CHECK(parsed.gens[i].rows == direct.gens[i].rows);
    CHECK(parsed.gens[i].cols == direct.gens[i].cols);
    CHECK(parsed.gens[i].w == direct.gens[i].w);
    CHECK(parsed.gens[i].poly == direct.gens[i].poly);
  }
}

TEST_CASE("gb-check exit codes and report") {
  const RunResult ok = run_cli("gb-check --m 2 --k 2");
  CHECK(ok.exit_code == 0);
  const json doc = json::parse(ok.out);
  check_schema(doc, "gb_report.schema.json");
  CHECK(doc["status"] == "verified");
  CHECK(doc["spairs_reduce_to_zero"] == true);
  CHECK(doc["lm_matches_formula"] == json::array({true, true}));

  const RunResult capped = run_cli("gb-check --m 3 --k 3 --max-steps 3");
  CHECK(capped.exit_code == 3);
  const json capped_doc = json::parse(capped.out);
  check_schema(capped_doc, "gb_report.schema.json");
  CHECK(capped_doc["status"] == "inconclusive");
  CHECK(capped_doc["spairs_reduce_to_zero"].is_null());

  CHECK(run_cli("gb-check --m 0 --k 1").exit_code == 2);
}

TEST_CASE("hilbert report") {
  const RunResult res = run_cli("hilbert --m 2 --k 1 --degree 12");
  CHECK(res.exit_code == 0);
  const json doc = json::parse(res.out);
  check_schema(doc, "hilbert.schema.json");
  CHECK(doc["degree"] == "2");
  CHECK(doc["fvector"] == json::array({"4", "5", "2"}));
  for (const json& row : doc["hilbert"]) {
    const long long d = row["d"].get<long long>();
    CHECK(row["value"] == std::to_string((d + 1) * (d + 1)));
  }
  CHECK(run_cli("hilbert --m 2 --k 1 --degree -1").exit_code == 2);
}

TEST_CASE("census report") {
  const RunResult res = run_cli("census --m 3 --n 3 --r 2 --k 2");
  CHECK(res.exit_code == 0);
  const json doc = json::parse(res.out);
  check_schema(doc, "census.schema.json");
  CHECK(doc["variety_codim"] == 8);
  CHECK(doc["codims"] == json::array({8, 9}));
  CHECK(doc["exactness"] == "exact");
  CHECK(doc["component_count"] == 2);

  const RunResult lb = run_cli("census --m 4 --n 5 --r 3 --k 5");
  CHECK(lb.exit_code == 0);
  const json lb_doc = json::parse(lb.out);
  check_schema(lb_doc, "census.schema.json");
  CHECK(lb_doc["exactness"] == "lower_bound");
  CHECK(lb_doc["component_count"] == 3);

  CHECK(run_cli("census --m 3 --n 2 --r 2 --k 1").exit_code == 2);
  CHECK(run_cli("census --m 3 --n 3 --r 4 --k 1").exit_code == 2);
}

TEST_CASE("count report and caps") {
  const RunResult res = run_cli("count --m 2 --n 2 --r 2 --k 1 --q 2");
  CHECK(res.exit_code == 0);
  const json doc = json::parse(res.out);
  check_schema(doc, "count.schema.json");
  CHECK(doc["count"] == "10");
  CHECK(doc["enumerated"] == "16");
  CHECK(doc["method"] == "VariableLevel");

  const RunResult ring = run_cli("count --m 2 --n 2 --r 2 --k 1 --q 2 --ring-level");
  CHECK(ring.exit_code == 0);
  const json ring_doc = json::parse(ring.out);
  check_schema(ring_doc, "count.schema.json");
  CHECK(ring_doc["count"] == "10");
  CHECK(ring_doc["method"] == "RingLevel");

  CHECK(run_cli("count --m 2 --n 2 --r 2 --k 2 --q 3 --cap 100").exit_code == 3);
  CHECK(run_cli("count --m 2 --n 2 --r 2 --k 1 --q 4").exit_code == 2);

  const RunResult t1 = run_cli("count --m 2 --n 2 --r 2 --k 2 --q 3 --threads 1");
  const RunResult t8 = run_cli("count --m 2 --n 2 --r 2 --k 2 --q 3 --threads 8");
  CHECK(t1.exit_code == 0);
  CHECK(t1.out == t8.out);
  CHECK(json::parse(t1.out)["count"] == "945");
}

TEST_CASE("witness reports") {
  const RunResult sep = run_cli("witness --kind separation --m 3 --n 3 --k 4 --s 1 --alpha 1");
  CHECK(sep.exit_code == 0);
  const json sep_doc = json::parse(sep.out);
  check_schema(sep_doc, "witness.schema.json");
  CHECK(sep_doc["verified"] == true);
  CHECK(sep_doc["w"] == 3);
  CHECK(sep_doc["field"] == "Q");
  CHECK(sep_doc["point"]["x[1,1,2]"] == "1");

  const RunResult sep5 = run_cli("witness --kind separation --m 3 --n 3 --k 5 --s 0 --alpha 2 --q 5");
  CHECK(sep5.exit_code == 0);
  check_schema(json::parse(sep5.out), "witness.schema.json");
  CHECK(json::parse(sep5.out)["field"] == "F_5");

  const RunResult inter = run_cli("witness --kind intersection --m 3 --n 3 --k 2 --q 3");
  CHECK(inter.exit_code == 0);
  const json inter_doc = json::parse(inter.out);
  check_schema(inter_doc, "witness.schema.json");
  CHECK(inter_doc["verified"] == true);
  CHECK(inter_doc["locus_a"] == "X_0");
  CHECK(inter_doc["locus_b"] == "Y_1");
  CHECK(inter_doc["curve"].size() == 2);

  const RunResult deep = run_cli("witness --kind intersection --m 3 --n 4 --k 5");
  CHECK(deep.exit_code == 0);
  const json deep_doc = json::parse(deep.out);
  check_schema(deep_doc, "witness.schema.json");
  CHECK(deep_doc["locus_a"] == "X_1");
  CHECK(deep_doc["locus_b"] == "Y_2");

  const RunResult lift = run_cli("witness --kind lift --m 3 --n 3 --r 3 --k 2 --q 3 --seed 7");
  CHECK(lift.exit_code == 0);
  const json lift_doc = json::parse(lift.out);
  check_schema(lift_doc, "witness.schema.json");
  CHECK(lift_doc["verified"] == true);
  CHECK(lift_doc["base_membership"] == true);
  CHECK(lift_doc["lifted_membership"] == true);
  CHECK(lift_doc["base_shape"] == json({{"m", 2}, {"n", 2}, {"r", 2}, {"k", 2}}));

  const RunResult lift_again = run_cli("witness --kind lift --m 3 --n 3 --r 3 --k 2 --q 3 --seed 7");
  CHECK(lift.out == lift_again.out);

  CHECK(run_cli("witness --kind sideways --m 3 --n 3 --k 2").exit_code == 2);
  CHECK(run_cli("witness --kind separation --m 3 --n 3 --k 4 --s 9 --alpha 1").exit_code == 2);
  CHECK(run_cli("witness --kind lift --m 3 --n 3 --r 3 --k 2").exit_code == 2);
}

TEST_CASE("usage and help") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("ideal --m 2 --n 2 --r 2").exit_code == 2);
  CHECK(run_cli("ideal --m 2 --n 2 --r 2 --k 1 --format yaml").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("census --help").exit_code == 0);
}

TEST_CASE("output flag writes the same bytes") {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "truncdet_cli_out.json";
  std::filesystem::remove(path);
  const RunResult direct = run_cli("census --m 3 --n 4 --r 2 --k 3");
  const RunResult routed = run_cli("census --m 3 --n 4 --r 2 --k 3 --output " + path.string());
  CHECK(routed.exit_code == 0);
  CHECK(routed.out.empty());
  std::ifstream in(path, std::ios::binary);
  const std::string file_content((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  CHECK(file_content == direct.out);
  std::filesystem::remove(path);
}

TEST_CASE("validator is not vacuous") {
  const json count_doc = json::parse(run_cli("count --m 2 --n 2 --r 2 --k 1 --q 2").out);
  const json schema = load_schema("census.schema.json");
  std::vector<std::string> errors;
  validate(schema, schema, count_doc, "$", errors);
  CHECK(!errors.empty());
}

} // TEST_SUITE

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: cli_tests <truncdet-binary> <schema-dir> [doctest options]\n");
    return 2;
  }
  g_binary = argv[1];
  g_schema_dir = argv[2];
  std::vector<char*> rest;
  rest.push_back(argv[0]);
  for (int i = 3; i < argc; ++i) rest.push_back(argv[i]);
  doctest::Context context(static_cast<int>(rest.size()), rest.data());
  return context.run();
}
