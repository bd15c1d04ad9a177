#include "finorb/bounds.hpp"

#include "finorb/errors.hpp"

namespace finorb {

namespace {

// Exponents past this produce numbers in the hundreds of megabytes;
// fail loudly instead of thrashing.
constexpr unsigned long kExponentCap = 1u << 20;

Integer checked_pow(const Integer& base, const Integer& exponent) {
  if (exponent < 0) throw input_error("negative exponent");
  if (!exponent.fits_ulong_p() || exponent.get_ui() > kExponentCap) {
    throw resource_error("bound exponent too large to materialize");
  }
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
  return out;
}

void require_positive(const Integer& v, const char* name) {
  if (v < 1) throw input_error(std::string(name) + " must be >= 1");
}

}  // namespace

Integer pezda_cycle_bound(std::uint32_t n) {
  if (n < 1) throw input_error("n must be >= 1");
  if (n == 2) return 24;
  if (n == 3) return 112;
  // 2 * (4^n - 2^n)
  Integer four_n, two_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
  return 2 * (four_n - two_n);
}

Integer single_map_bound(const Integer& point_count,
                         const Integer& cycle_bound) {
  require_positive(point_count, "point_count");
  require_positive(cycle_bound, "cycle_bound");
  return point_count + cycle_bound;
}

Integer dvr_bound(const Integer& point_count, const Integer& q,
                  std::uint32_t d, const Integer& p, std::uint32_t vp) {
  require_positive(point_count, "point_count");
  require_positive(q, "q");
  require_positive(p, "p");
  if (vp < 1) throw input_error("vp must be >= 1");
  Integer qd = checked_pow(q, Integer(d));
  Integer pv = checked_pow(p, Integer(vp));
  return point_count * ((qd - 1) * pv + 1);
}

Integer multi_map_bound(const Integer& C, const Integer& point_count,
                        const Integer& s) {
  require_positive(C, "C");
  require_positive(point_count, "point_count");
  require_positive(s, "s");
  const Integer base = C * point_count * s + 1;
  const Integer exponent = C * point_count - 1;
  return checked_pow(base, exponent);
}

Integer corollary3_bound(const Integer& C, const Integer& p, std::uint32_t n,
                         const Integer& s) {
  require_positive(p, "p");
  return multi_map_bound(C, checked_pow(p, Integer(n)), s);
}

Integer eventually_fixed_bound(const Integer& p, std::uint32_t n) {
  require_positive(p, "p");
  return checked_pow(p, Integer(n));
}

BoundReport pezda_report(std::uint32_t n) {
  return {"pezda", {{"n", Integer(n)}}, pezda_cycle_bound(n)};
}

BoundReport single_map_report(const Integer& point_count,
                              const Integer& cycle_bound) {
  return {"single",
          {{"point_count", point_count}, {"cycle_bound", cycle_bound}},
          single_map_bound(point_count, cycle_bound)};
}

BoundReport dvr_report(const Integer& point_count, const Integer& q,
                       std::uint32_t d, const Integer& p, std::uint32_t vp) {
  return {"dvr",
          {{"point_count", point_count},
           {"q", q},
           {"d", Integer(d)},
           {"p", p},
           {"vp", Integer(vp)}},
          dvr_bound(point_count, q, d, p, vp)};
}

BoundReport multi_map_report(const Integer& C, const Integer& point_count,
                             const Integer& s) {
  return {"multi",
          {{"C", C}, {"point_count", point_count}, {"s", s}},
          multi_map_bound(C, point_count, s)};
}

BoundReport corollary3_report(const Integer& C, const Integer& p,
                              std::uint32_t n, const Integer& s) {
  return {"corollary3",
          {{"C", C}, {"p", p}, {"n", Integer(n)}, {"s", s}},
          corollary3_bound(C, p, n, s)};
}

BoundReport eventually_fixed_report(const Integer& p, std::uint32_t n) {
  return {"eventually_fixed",
          {{"p", p}, {"n", Integer(n)}},
          eventually_fixed_bound(p, n)};
}

}  // namespace finorb
