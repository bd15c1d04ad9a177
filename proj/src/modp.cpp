#include "finorb/modp.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <utility>

#include "finorb/errors.hpp"

namespace finorb {

namespace {

// Splits [0, count) into chunks and runs fn(begin, end) on worker threads.
// Chunks are disjoint, so writes into preallocated slots stay deterministic.
template <typename Fn>
void parallel_ranges(std::uint64_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count < 4096) {
    fn(std::uint64_t{0}, count);
    return;
  }
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

void advance_digits(std::vector<std::uint64_t>& digits, std::uint64_t p) {
  for (auto& d : digits) {
    if (++d < p) return;
    d = 0;
  }
}

std::vector<PolynomialModP> reduce_components(const PolyMap& map,
                                              std::uint64_t p) {
  std::vector<PolynomialModP> out;
  out.reserve(map.arity());
  for (const auto& c : map.components()) out.push_back(reduce_mod_prime(c, p));
  return out;
}

}  // namespace

std::vector<std::uint64_t> index_to_point(std::uint64_t index, std::uint64_t p,
                                          std::uint32_t arity) {
  std::vector<std::uint64_t> point(arity);
  for (std::uint32_t i = 0; i < arity; ++i) {
    point[i] = index % p;
    index /= p;
  }
  return point;
}

std::uint64_t point_to_index(const std::vector<std::uint64_t>& point,
                             std::uint64_t p) {
  std::uint64_t index = 0;
  for (std::size_t i = point.size(); i-- > 0;) {
    index = index * p + (point[i] % p);
  }
  return index;
}

std::uint64_t checked_point_count(std::uint64_t p, std::uint32_t arity,
                                  std::uint64_t budget) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < arity; ++i) {
    if (count > budget / p) {
      throw budget_exceeded("p^n exceeds the point enumeration budget");
    }
    count *= p;
  }
  if (count > budget) {
    throw budget_exceeded("p^n exceeds the point enumeration budget");
  }
  return count;
}

FiniteMap build_finite_map(const PolyMap& map, std::uint64_t p,
                           std::uint64_t budget, unsigned threads) {
  const std::uint64_t count = checked_point_count(p, map.arity(), budget);
  if (count > 0xffffffffull) {
    throw budget_exceeded("point table too large for 32-bit indices");
  }
  const auto components = reduce_components(map, p);

  FiniteMap fm;
  fm.p = p;
  fm.arity = map.arity();
  fm.table.resize(count);

  parallel_ranges(count, threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> point = index_to_point(begin, p, fm.arity);
    std::vector<std::uint64_t> image(fm.arity);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      for (std::uint32_t i = 0; i < fm.arity; ++i) {
        image[i] = components[i].evaluate(point);
      }
      fm.table[idx] = static_cast<std::uint32_t>(point_to_index(image, p));
      advance_digits(point, p);
    }
  });
  return fm;
}

std::vector<std::uint64_t> fixed_points(const FiniteMap& fm) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < fm.point_count(); ++i) {
    if (fm.table[i] == i) out.push_back(i);
  }
  return out;
}

std::vector<std::uint64_t> periodic_points(const FiniteMap& fm) {
  const std::uint64_t n = fm.point_count();
  std::vector<std::uint32_t> indegree(n, 0);
  for (std::uint64_t i = 0; i < n; ++i) ++indegree[fm.table[i]];

  std::vector<std::uint64_t> stack;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) stack.push_back(i);
  }
  while (!stack.empty()) {
    const std::uint64_t v = stack.back();
    stack.pop_back();
    const std::uint64_t w = fm.table[v];
    if (--indegree[w] == 0) stack.push_back(w);
  }

  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (indegree[i] > 0) out.push_back(i);
  }
  return out;
}

UnramifiedReport unramified_report(const PolyMap& map, std::uint64_t p,
                                   WitnessMode mode, std::uint64_t budget,
                                   unsigned threads) {
  const FiniteMap fm = build_finite_map(map, p, budget, threads);
  const auto points = mode == WitnessMode::FixedPointsOnly
                          ? fixed_points(fm)
                          : periodic_points(fm);
  const PolynomialModP jac = reduce_mod_prime(jacobian_determinant(map), p);

  UnramifiedReport report;
  report.p = p;
  report.mode = mode;
  report.ok = true;
  report.checked_count = points.size();
  report.witnesses.reserve(points.size());
  for (const auto idx : points) {
    auto coords = index_to_point(idx, p, map.arity());
    const std::uint64_t value = jac.evaluate(coords);
    if (value == 0) report.ok = false;
    report.witnesses.push_back({std::move(coords), value});
  }
  return report;
}

std::uint64_t count_affine_points(const std::vector<Polynomial>& equations,
                                  std::uint32_t arity, std::uint64_t p,
                                  std::uint64_t budget, unsigned threads) {
  const std::uint64_t count = checked_point_count(p, arity, budget);
  if (equations.empty()) return count;

  std::vector<PolynomialModP> reduced;
  reduced.reserve(equations.size());
  for (const auto& eq : equations) {
    if (eq.arity() != arity) throw input_error("equation arity mismatch");
    reduced.push_back(reduce_mod_prime(eq, p));
  }

  std::vector<std::uint64_t> partial(threads > 1 ? threads : 1, 0);
  std::atomic<unsigned> next_slot{0};
  parallel_ranges(count, threads, [&](std::uint64_t begin, std::uint64_t end) {
    const unsigned slot = next_slot.fetch_add(1);
    std::vector<std::uint64_t> point = index_to_point(begin, p, arity);
    std::uint64_t hits = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      bool zero_everywhere = true;
      for (const auto& eq : reduced) {
        if (eq.evaluate(point) != 0) {
          zero_everywhere = false;
          break;
        }
      }
      if (zero_everywhere) ++hits;
      advance_digits(point, p);
    }
    partial[slot] += hits;
  });

  std::uint64_t total = 0;
  for (const auto h : partial) total += h;
  return total;
}

Integer integer_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw input_error("matrix must be square");
  }
  if (n == 0) return Integer(1);
  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return Integer(0);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign < 0 ? Integer(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

bool monomial_unramified(const std::vector<std::vector<Integer>>& A,
                         std::uint64_t p) {
  const Integer det = integer_determinant(A);
  return mod_p(det, p) != 0;
}

}  // namespace finorb
