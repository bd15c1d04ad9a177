#include "finorb/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "finorb/errors.hpp"

namespace finorb {

namespace {

// Buchberger blowup guard: fail loudly instead of hanging.
constexpr std::size_t kGroebnerTermCap = 100000;

void check_size(const Polynomial& p) {
  if (p.term_count() > kGroebnerTermCap) {
    throw resource_error("groebner intermediate exceeds 100000 terms");
  }
}

struct Tracked {
  Polynomial poly;
  std::vector<Polynomial> cofactors;  // one per generator
};

Tracked make_zero(std::uint32_t arity, std::size_t ngens) {
  Tracked t{Polynomial(arity), {}};
  t.cofactors.assign(ngens, Polynomial(arity));
  return t;
}

void axpy(Tracked& target, const Monomial& mono, const Rational& coeff,
          const Tracked& source) {
  target.poly -= term_times(mono, coeff, source.poly);
  check_size(target.poly);
  for (std::size_t j = 0; j < target.cofactors.size(); ++j) {
    if (source.cofactors[j].is_zero()) continue;
    target.cofactors[j] -= term_times(mono, coeff, source.cofactors[j]);
    check_size(target.cofactors[j]);
  }
}

void scale(Tracked& t, const Rational& s) {
  t.poly *= s;
  for (auto& c : t.cofactors) c *= s;
}

// Full normal form: no term of the remainder is divisible by any basis
// leading monomial. Cofactors follow every cancellation.
Tracked normal_form(Tracked f, const std::vector<Tracked>& basis,
                    const std::vector<bool>& alive) {
  Tracked remainder = make_zero(f.poly.arity(), f.cofactors.size());
  while (!f.poly.is_zero()) {
    const Monomial& lm = f.poly.leading_monomial();
    const Rational lc = f.poly.leading_coefficient();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!alive[i] || basis[i].poly.is_zero()) continue;
      if (!basis[i].poly.leading_monomial().divides(lm)) continue;
      const Monomial q = monomial_quotient(lm, basis[i].poly.leading_monomial());
      const Rational c = lc / basis[i].poly.leading_coefficient();
      axpy(f, q, c, basis[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      // move the irreducible leading term over to the remainder
      remainder.poly.add_term(lm, lc);
      Polynomial lt(f.poly.arity());
      lt.add_term(lm, lc);
      f.poly -= lt;
    }
  }
  for (std::size_t j = 0; j < remainder.cofactors.size(); ++j) {
    remainder.cofactors[j] = f.cofactors[j];
  }
  return remainder;
}

Tracked s_polynomial(const Tracked& a, const Tracked& b) {
  const Monomial lcm =
      monomial_lcm(a.poly.leading_monomial(), b.poly.leading_monomial());
  const Monomial qa = monomial_quotient(lcm, a.poly.leading_monomial());
  const Monomial qb = monomial_quotient(lcm, b.poly.leading_monomial());
  Tracked out = make_zero(a.poly.arity(), a.cofactors.size());
  axpy(out, qa, Rational(-1) / a.poly.leading_coefficient(), a);
  axpy(out, qb, Rational(1) / b.poly.leading_coefficient(), b);
  return out;
}

void verify_tracking(const Tracked& t, const std::vector<Polynomial>& gens) {
  Polynomial acc(t.poly.arity());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    acc += t.cofactors[j] * gens[j];
  }
  if (!(acc == t.poly)) {
    throw std::logic_error("cofactor tracking out of sync with basis element");
  }
}

}  // namespace

bool TrackedBasis::is_unit_ideal() const {
  return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

TrackedBasis groebner_basis(const std::vector<Polynomial>& generators) {
  if (generators.empty()) throw input_error("empty generator list");
  const std::uint32_t arity = generators[0].arity();
  for (const auto& g : generators) {
    if (g.arity() != arity) throw input_error("generators must share one arity");
  }

  std::vector<Tracked> work;
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].is_zero()) continue;
    Tracked t = make_zero(arity, generators.size());
    t.poly = generators[j];
    t.cofactors[j] = Polynomial::constant(arity, 1);
    work.push_back(std::move(t));
  }

  std::vector<bool> alive(work.size(), true);
  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  auto push_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (alive[i]) pending.insert({i, k});
    }
  };
  for (std::size_t k = 0; k < work.size(); ++k) push_pairs_for(k);

  while (!pending.empty()) {
    const auto [i, j] = *pending.begin();
    pending.erase(pending.begin());
    if (!alive[i] || !alive[j]) continue;

    const Monomial& lmi = work[i].poly.leading_monomial();
    const Monomial& lmj = work[j].poly.leading_monomial();
    const Monomial lcm = monomial_lcm(lmi, lmj);

    // product criterion: coprime leading monomials reduce to zero
    if (lcm.total_degree() == lmi.total_degree() + lmj.total_degree()) {
      continue;
    }
    // chain criterion
    bool skip = false;
    for (std::size_t k = 0; k < work.size() && !skip; ++k) {
      if (k == i || k == j || !alive[k]) continue;
      if (!work[k].poly.leading_monomial().divides(lcm)) continue;
      const Pair ik{std::min(i, k), std::max(i, k)};
      const Pair jk{std::min(j, k), std::max(j, k)};
      if (pending.count(ik) == 0 && pending.count(jk) == 0) skip = true;
    }
    if (skip) continue;

    Tracked s = normal_form(s_polynomial(work[i], work[j]), work, alive);
    if (s.poly.is_zero()) continue;
    work.push_back(std::move(s));
    alive.push_back(true);
    push_pairs_for(work.size() - 1);
  }

  // minimal basis: drop elements whose leading monomial is divisible by
  // another surviving one
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (!alive[i]) continue;
    for (std::size_t j = 0; j < work.size(); ++j) {
      if (i == j || !alive[j]) continue;
      if (work[j].poly.leading_monomial().divides(
              work[i].poly.leading_monomial())) {
        alive[i] = false;
        break;
      }
    }
  }

  // interreduce to the reduced basis, then normalize monic
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (!alive[i]) continue;
    alive[i] = false;
    Tracked r = normal_form(std::move(work[i]), work, alive);
    alive[i] = true;
    work[i] = std::move(r);
    if (work[i].poly.is_zero()) {
      alive[i] = false;
      continue;
    }
    scale(work[i], Rational(1) / work[i].poly.leading_coefficient());
  }

  TrackedBasis out;
  out.generators = generators;
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (!alive[i]) continue;
    verify_tracking(work[i], generators);
    out.basis.push_back(work[i].poly);
    out.cofactors.push_back(work[i].cofactors);
  }
  return out;
}

Certificate unit_ideal_certificate(const PolyMap& map) {
  const std::uint32_t n = map.arity();
  std::vector<Polynomial> gens;
  gens.reserve(n + 1);
  gens.push_back(jacobian_determinant(map));
  for (auto& g : fixed_locus_polynomials(map)) gens.push_back(std::move(g));

  const TrackedBasis tb = groebner_basis(gens);
  if (!tb.is_unit_ideal()) {
    throw common_zero_exists(
        "Jacobian vanishes at a fixed point over the algebraic closure");
  }

  Certificate cert;
  cert.h = tb.cofactors[0];
  cert.k = tb.basis[0].constant_value();

  Integer N = cert.k.get_den();
  for (const auto& hi : cert.h) {
    Integer l = denominator_lcm(hi);
    mpz_lcm(N.get_mpz_t(), N.get_mpz_t(), l.get_mpz_t());
  }
  cert.N = N;
  Rational nk = cert.k * Rational(N);
  if (nk.get_den() != 1 || nk == 0) {
    throw std::logic_error("certificate normalization failed");
  }
  cert.Nk = nk.get_num();

  if (!verify_certificate(cert, map)) {
    throw std::logic_error("certificate identity failed re-verification");
  }
  return cert;
}

bool verify_certificate(const Certificate& cert, const PolyMap& map) {
  const std::uint32_t n = map.arity();
  if (cert.h.size() != n + 1 || cert.k == 0) return false;
  Polynomial acc = cert.h[0] * jacobian_determinant(map);
  const auto gs = fixed_locus_polynomials(map);
  for (std::uint32_t i = 0; i < n; ++i) {
    acc += cert.h[i + 1] * gs[i];
  }
  acc -= Polynomial::constant(n, cert.k);
  return acc.is_zero();
}

std::uint64_t select_prime(const Certificate& cert, const PolyMap& map,
                           std::uint64_t start) {
  std::uint64_t p = start < 2 ? 2 : start;
  for (;;) {
    p = next_prime_at_least(p);
    const bool divides_nk =
        mpz_divisible_ui_p(cert.Nk.get_mpz_t(), static_cast<unsigned long>(p));
    const bool divides_n = mpz_divisible_ui_p(
        map.denominator().get_mpz_t(), static_cast<unsigned long>(p));
    if (!divides_nk && !divides_n) return p;
    ++p;
  }
}

}  // namespace finorb
