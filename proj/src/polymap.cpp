#include "finorb/polymap.hpp"

#include <utility>

#include "finorb/errors.hpp"

namespace finorb {

PolyMap::PolyMap(Integer denominator, std::vector<Polynomial> components)
    : arity_(static_cast<std::uint32_t>(components.size())),
      denominator_(std::move(denominator)),
      components_(std::move(components)) {
  if (components_.empty()) throw input_error("map needs at least one component");
  if (denominator_ < 1) throw input_error("map denominator must be positive");
  for (const auto& c : components_) {
    if (c.arity() != arity_) {
      throw input_error("component arity does not match map arity");
    }
    for (const auto& [mono, coeff] : c.terms()) {
      if (!divides_power_of(coeff.get_den(), denominator_)) {
        throw input_error(
            "coefficient denominator does not divide a power of N");
      }
    }
  }
}

namespace {

Polynomial det_cofactor(const std::vector<std::vector<Polynomial>>& m,
                        std::vector<std::size_t> cols, std::size_t row,
                        std::uint32_t arity) {
  if (cols.size() == 1) return m[row][cols[0]];
  Polynomial acc(arity);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Polynomial& entry = m[row][cols[k]];
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j != k) rest.push_back(cols[j]);
    }
    Polynomial minor = det_cofactor(m, std::move(rest), row + 1, arity);
    minor *= entry;
    if (k % 2 == 0) {
      acc += minor;
    } else {
      acc -= minor;
    }
  }
  return acc;
}

Polynomial det_bareiss(std::vector<std::vector<Polynomial>> m,
                       std::uint32_t arity) {
  const std::size_t n = m.size();
  int sign = 1;
  Polynomial prev = Polynomial::constant(arity, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return Polynomial(arity);  // column of zeros
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(t, prev);
      }
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

}  // namespace

Polynomial jacobian_determinant(const PolyMap& map) {
  const std::uint32_t n = map.arity();
  std::vector<std::vector<Polynomial>> jac;
  jac.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<Polynomial> row;
    row.reserve(n);
    for (std::uint32_t j = 1; j <= n; ++j) {
      row.push_back(map.component(i).partial_derivative(j));
    }
    jac.push_back(std::move(row));
  }
  if (n <= 4) return det_bareiss(std::move(jac), n);
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  return det_cofactor(jac, std::move(cols), 0, n);
}

std::vector<Polynomial> fixed_locus_polynomials(const PolyMap& map) {
  std::vector<Polynomial> gs;
  gs.reserve(map.arity());
  for (std::uint32_t i = 0; i < map.arity(); ++i) {
    gs.push_back(map.component(i) -
                 Polynomial::variable(map.arity(), i + 1));
  }
  return gs;
}

bool is_unramified_shape(const PolyMap& map, std::uint64_t p) {
  if (mpz_divisible_ui_p(map.denominator().get_mpz_t(),
                         static_cast<unsigned long>(p))) {
    throw input_error("shape test requires p not dividing N");
  }
  for (const auto& g : fixed_locus_polynomials(map)) {
    for (const auto& [mono, coeff] : g.terms()) {
      if (mpz_divisible_ui_p(coeff.get_num_mpz_t(),
                             static_cast<unsigned long>(p))) {
        continue;  // goes into the p*g_i part
      }
      bool all_divisible = true;
      for (auto e : mono.exponents) {
        if (e % p != 0) {
          all_divisible = false;
          break;
        }
      }
      if (!all_divisible) return false;  // fits neither p*g_i nor h_i(x^p)
    }
  }
  return true;
}

}  // namespace finorb
