#include "eulerzeros/eulerian.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace eulerzeros {

namespace {

Polynomial next_eulerian(EulerianKind kind, unsigned m,
                         const Polynomial& prev) {
  // z (1 - z)
  static const Polynomial kZOneMinusZ{0, 1, -1};
  const Polynomial d = poly_derivative(prev);
  if (kind == EulerianKind::TypeA) {
    const Polynomial lin{1, Rational(m) - 1};
    return lin * prev + kZOneMinusZ * d;
  }
  const Polynomial lin{1, Rational(2 * m) - 1};
  return lin * prev + poly_scale(kZOneMinusZ * d, 2);
}

class EulerianCache {
 public:
  const Polynomial& get(EulerianKind kind, unsigned m) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find({kind, m}); it != table_.end()) {
        return it->second;
      }
    }
    // Start from the largest cached index below m.
    unsigned start = 0;
    Polynomial p{1};
    {
      std::shared_lock lock(mutex_);
      auto it = table_.lower_bound({kind, m});
      if (it != table_.begin()) {
        --it;
        if (it->first.first == kind) {
          start = it->first.second;
          p = it->second;
        }
      }
    }
    std::vector<std::pair<unsigned, Polynomial>> fresh;
    fresh.emplace_back(start, p);
    for (unsigned k = start + 1; k <= m; ++k) {
      p = next_eulerian(kind, k, p);
      fresh.emplace_back(k, p);
    }
    std::unique_lock lock(mutex_);
    for (auto& [k, poly] : fresh) table_.try_emplace({kind, k}, std::move(poly));
    return table_.at({kind, m});
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<EulerianKind, unsigned>, Polynomial> table_;
};

EulerianCache& cache() {
  static EulerianCache instance;
  return instance;
}

}  // namespace

std::string_view to_string(EulerianKind kind) {
  return kind == EulerianKind::TypeA ? "A" : "B";
}

const Polynomial& eulerian(EulerianKind kind, unsigned m) {
  return cache().get(kind, m);
}

Polynomial eulerian_a_bruteforce(unsigned m) {
  if (m < 1 || m > 9) {
    throw DomainError("eulerian_a_bruteforce: m must be in 1..9, got " +
                      std::to_string(m));
  }
  std::vector<unsigned> perm(m);
  std::iota(perm.begin(), perm.end(), 1u);
  std::vector<long> counts(m, 0);
  do {
    unsigned descents = 0;
    for (unsigned i = 0; i + 1 < m; ++i) {
      if (perm[i] > perm[i + 1]) ++descents;
    }
    ++counts[descents];
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Rational> coeffs(counts.begin(), counts.end());
  return Polynomial(std::move(coeffs));
}

Polynomial eulerian_b_series_oracle(unsigned m, unsigned terms) {
  if (terms < m + 2) {
    throw DomainError("eulerian_b_series_oracle: need terms >= m+2");
  }
  std::vector<Rational> series;
  series.reserve(terms + 1);
  for (unsigned k = 0; k <= terms; ++k) {
    series.emplace_back(pow(BigInt(2 * k + 1), m));
  }
  // (1 - z)^{m+1} by repeated multiplication.
  Polynomial factor{1};
  for (unsigned i = 0; i <= m; ++i) factor = factor * Polynomial{1, -1};
  const Polynomial product = Polynomial(std::move(series)) * factor;
  std::vector<Rational> head;
  for (unsigned k = 0; k <= m; ++k) head.push_back(product.coeff(k));
  return Polynomial(std::move(head));
}

BigInt first_coeff_formula(EulerianKind kind, unsigned m) {
  if (m < 1) throw DomainError("first_coeff_formula: m must be >= 1");
  if (kind == EulerianKind::TypeA) return pow(BigInt(2), m) - m - 1;
  return pow(BigInt(3), m) - (m + 1);
}

}  // namespace eulerzeros
