#include "truncdet/census.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace truncdet {

namespace {

void check_shape(int m, int n, int r, int k, int rmin) {
  if (r < rmin) throw std::invalid_argument(std::to_string(rmin) + " <= r required");
  if (r > m) throw std::invalid_argument("r <= m required");
  if (m > n) throw std::invalid_argument("m <= n required");
  if (k < 1) throw std::invalid_argument("k >= 1 required");
}

std::string x_description(int s) {
  return "closure of the locus with levels below " + std::to_string(s) +
         " zero and some level-" + std::to_string(s) + " coordinate nonzero";
}

std::string y_description(int s) {
  return "locus with levels below " + std::to_string(s) + " zero";
}

} // namespace

long long variety_codim(int m, int n, int r, int k) {
  if (r < 1) throw std::invalid_argument("1 <= r required");
  check_shape(m, n, r, k, 1);
  static std::map<std::tuple<int, int, int, int>, long long> memo;
  auto key = std::make_tuple(m, n, r, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  long long value;
  if (r == m) {
    value = static_cast<long long>(k) * (n - m + 1);
  } else if (r == 1) {
    value = static_cast<long long>(m) * n * k; // the origin
  } else if (k == 1) {
    value = static_cast<long long>(m - r + 1) * (n - r + 1); // classical, cited as known
  } else if (k < r) {
    value = variety_codim(m - 1, n - 1, r - 1, k);
  } else {
    int lambda = k / r, mu = k % r;
    value = -1;
    for (int s = 0; s <= lambda; ++s) {
      long long cs = s < lambda ? variety_codim(m - 1, n - 1, r - 1, k - r * s)
                                : (mu == 0 ? 0 : variety_codim(m, n, r, mu));
      long long total = cs + static_cast<long long>(s) * m * n;
      if (value < 0 || total < value) value = total;
    }
  }
  memo.emplace(key, value);
  return value;
}

ComponentReport census_maximal(int m, int n, int k) {
  check_shape(m, n, m, k, 1);
  ComponentReport rep{m, n, m, k, {}, 0, CountExactness::Exact, 1};
  long long codim = static_cast<long long>(k) * (n - m + 1);
  rep.components.push_back({"Z", 0, codim,
                            m == 1 ? "the origin: all entries of the single row vanish"
                                   : "irreducible variety of the maximal minors"});
  rep.variety_codim = codim;
  return rep;
}

ComponentReport census_2xk(int m, int n, int k) {
  check_shape(m, n, 2, k, 2);
  if (m <= 2) throw std::invalid_argument("2 < m required");
  if (k < 2) throw std::invalid_argument("k >= 2 required");
  int big_l = k / 2;
  ComponentReport rep{m, n, 2, k, {}, 0, CountExactness::Exact, big_l + 1};
  for (int s = 0; s < big_l; ++s)
    rep.components.push_back({"X_" + std::to_string(s), s,
                              static_cast<long long>(m - 1) * (n - 1) * (k - 2 * s) +
                                  static_cast<long long>(s) * m * n,
                              x_description(s)});
  long long y_codim = k % 2 == 0 ? static_cast<long long>(m) * n * big_l
                                 : static_cast<long long>(m - 1) * (n - 1) +
                                       static_cast<long long>(m) * n * big_l;
  rep.components.push_back({"Y_" + std::to_string(big_l), big_l, y_codim, y_description(big_l)});
  rep.variety_codim = rep.components[0].codim;
  for (const Component& c : rep.components) rep.variety_codim = std::min(rep.variety_codim, c.codim);
  return rep;
}

ComponentReport census_tangent(int m, int n, int r) {
  check_shape(m, n, r, 2, 2);
  if (r >= m) throw std::invalid_argument("r < m required");
  ComponentReport rep{m, n, r, 2, {}, 0, CountExactness::Exact, 2};
  long long x_codim = 2ll * (m - r + 1) * (n - r + 1);
  long long y_codim = static_cast<long long>(m - r + 2) * (n - r + 2);
  rep.components.push_back({"X_0", 0, x_codim,
                            "closure of the locus where some (r-1)-minor of the degree-zero part is nonzero"});
  rep.components.push_back({"tangent-Y", 1, y_codim,
                            "locus where every (r-1)-minor of the degree-zero part vanishes"});
  rep.variety_codim = std::min(x_codim, y_codim);
  return rep;
}

ComponentReport census_general(int m, int n, int r, int k) {
  check_shape(m, n, r, k, 2);
  if (r == m) return census_maximal(m, n, k);

  if (k == 1) {
    ComponentReport rep{m, n, r, 1, {}, 0, CountExactness::Exact, 1};
    long long codim = static_cast<long long>(m - r + 1) * (n - r + 1);
    rep.components.push_back({"Z", 0, codim, "classical determinantal variety"});
    rep.variety_codim = codim;
    return rep;
  }

  if (k < r) {
    // rank-one reduction: components correspond bijectively, same codims
    ComponentReport sub = census_general(m - 1, n - 1, r - 1, k);
    ComponentReport rep{m, n, r, k, sub.components, sub.variety_codim, sub.exactness,
                        sub.component_count};
    for (Component& c : rep.components)
      c.description += "; via rank-one reduction from the " + std::to_string(m - 1) + "x" +
                       std::to_string(n - 1) + " case of " + std::to_string(r - 1) + "-minors";
    return rep;
  }

  int lambda = k / r, mu = k % r;
  ComponentReport rep{m, n, r, k, {}, 0,
                      r == 2 ? CountExactness::Exact : CountExactness::LowerBound, 0};
  for (int s = 0; s < lambda; ++s)
    rep.components.push_back({"X_" + std::to_string(s), s,
                              variety_codim(m - 1, n - 1, r - 1, k - r * s) +
                                  static_cast<long long>(s) * m * n,
                              x_description(s)});
  long long c_lambda = mu == 0 ? 0 : variety_codim(m, n, r, mu);
  rep.components.push_back({"Y_" + std::to_string(lambda), lambda,
                            c_lambda + static_cast<long long>(lambda) * m * n,
                            y_description(lambda)});
  rep.variety_codim = rep.components[0].codim;
  for (const Component& c : rep.components) rep.variety_codim = std::min(rep.variety_codim, c.codim);
  rep.component_count = rep.exactness == CountExactness::Exact
                            ? static_cast<long long>(rep.components.size())
                            : 1 + k / 2;
  return rep;
}

} // namespace truncdet
