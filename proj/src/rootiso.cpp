#include "eulerzeros/rootiso.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

namespace eulerzeros {

namespace {

using IntPoly = std::vector<BigInt>;

// Sign of b^d * p(a/b) for b > 0, by homogeneous Horner in integers.
int integer_sign_at(const IntPoly& c, const Rational& t) {
  if (c.empty()) return 0;
  const BigInt a = t.num();
  const BigInt b = t.den();
  BigInt acc = c.back();
  BigInt power = 1;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    power *= b;
    acc *= a;
    acc += c[k] * power;
  }
  return sgn(acc);
}

IntPoly to_int_poly(const Polynomial& p) {
  IntPoly out;
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) out.push_back(c.num());
  return out;
}

Polynomial from_int_poly(const IntPoly& c) {
  std::vector<Rational> out;
  out.reserve(c.size());
  for (const auto& v : c) out.emplace_back(v);
  return Polynomial(std::move(out));
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Divide by the positive gcd of the coefficients; sign is kept.
void remove_content(IntPoly& p) {
  BigInt g = 0;
  for (const auto& v : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0) return;
  for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// A positive multiple of the remainder of f by g.
IntPoly positive_pseudo_remainder(IntPoly f, const IntPoly& g) {
  const std::size_t dg = g.size() - 1;
  const BigInt& lg = g.back();
  bool flipped = false;
  while (f.size() >= g.size()) {
    const std::size_t shift = f.size() - g.size();
    const BigInt lf = f.back();
    for (auto& v : f) v *= lg;
    for (std::size_t k = 0; k <= dg; ++k) f[k + shift] -= lf * g[k];
    if (lg < 0) flipped = !flipped;
    f.pop_back();
    trim(f);
    remove_content(f);
  }
  if (flipped) {
    for (auto& v : f) v = -v;
  }
  return f;
}

std::size_t bit_size(const IntPoly& c) {
  std::size_t bits = 0;
  for (const auto& v : c) {
    bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
  }
  return bits;
}

std::size_t bit_length(const BigInt& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

// Depth cap for bisection: 4 * (coefficient bit-size + degree), widened by
// the number of halvings needed just to shrink the starting interval to the
// scale of its endpoints.
std::size_t depth_cap(const IntPoly& c, const RationalInterval& iv) {
  const Rational w = iv.width();
  return 4 * (bit_size(c) + c.size()) + bit_length(w.num()) +
         bit_length(w.den()) + bit_length(iv.lo().den()) +
         bit_length(iv.hi().den()) + 64;
}

// Exact division of p by (z - r); throws if r is not a root.
Polynomial deflate(const Polynomial& p, const Rational& r) {
  const auto a = p.coefficients();
  const std::size_t d = a.size() - 1;
  std::vector<Rational> q(d);
  Rational carry;
  for (std::size_t k = d; k >= 1; --k) {
    carry = a[k] + r * carry;
    q[k - 1] = carry;
  }
  if (!(a[0] + r * carry).is_zero()) {
    throw CertificationError("deflation by a non-root " + r.to_string());
  }
  return Polynomial(std::move(q));
}

std::string show(const RationalInterval& iv) {
  return "[" + iv.lo().to_string() + ", " + iv.hi().to_string() + "]";
}

}  // namespace

Fingerprint fingerprint(const Polynomial& p) {
  if (p.is_zero()) return 0;
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& v : primitive_integer_coefficients(p)) {
    const std::size_t part = std::hash<std::string>{}(v.get_str(16));
    h ^= part;
    h *= 1099511628211ull;
  }
  return h;
}

int sign_at(const Polynomial& p, const Rational& t) {
  return poly_eval(p, t).sign();
}

SturmChain::SturmChain(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  IntPoly a = primitive_integer_coefficients(p);
  fingerprint_ = fingerprint(p);
  integer_members_.push_back(a);
  if (a.size() > 1) {
    IntPoly b(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) b[k - 1] = a[k] * k;
    remove_content(b);
    integer_members_.push_back(b);
    while (integer_members_.back().size() > 1) {
      const IntPoly& f = integer_members_[integer_members_.size() - 2];
      const IntPoly& g = integer_members_.back();
      IntPoly r = positive_pseudo_remainder(f, g);
      if (r.empty()) {
        throw NotSquarefreeError(
            "not squarefree: Sturm chain ends at degree " +
            std::to_string(g.size() - 1) + " for " + p.to_string());
      }
      for (auto& v : r) v = -v;
      integer_members_.push_back(std::move(r));
    }
  }
  members_.reserve(integer_members_.size());
  for (const auto& m : integer_members_) members_.push_back(from_int_poly(m));
}

int SturmChain::source_sign(const Rational& t) const {
  return integer_sign_at(integer_members_.front(), t);
}

std::size_t SturmChain::sign_variations(const Rational& t) const {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& m : integer_members_) {
    const int s = integer_sign_at(m, t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

SturmChain sturm_chain(const Polynomial& p) { return SturmChain(p); }

std::size_t count_roots(const SturmChain& chain, const RationalInterval& iv) {
  for (const Rational* e : {&iv.lo(), &iv.hi()}) {
    if (chain.source_sign(*e) == 0) {
      throw EndpointIsRootError("endpoint " + e->to_string() +
                                " is a root; nudge it off before counting");
    }
  }
  if (iv.is_point()) return 0;
  const std::size_t vlo = chain.sign_variations(iv.lo());
  const std::size_t vhi = chain.sign_variations(iv.hi());
  if (vhi > vlo) {
    throw CertificationError("negative Sturm count on " + show(iv));
  }
  return vlo - vhi;
}

std::vector<IsolatedRoot> isolate_roots(const Polynomial& p,
                                        const RationalInterval& iv) {
  return isolate_roots(SturmChain(p), iv);
}

std::vector<IsolatedRoot> isolate_roots(const SturmChain& chain,
                                        const RationalInterval& iv) {
  const std::size_t total = count_roots(chain, iv);
  std::vector<IsolatedRoot> out;
  if (total == 0) return out;
  const IntPoly source = to_int_poly(chain.source());
  const std::size_t cap = depth_cap(source, iv);

  struct Task {
    Rational lo, hi;
    std::size_t vlo, vhi, depth;
  };
  // Depth-first, right half pushed first so results come out ascending.
  std::vector<Task> stack;
  stack.push_back({iv.lo(), iv.hi(), chain.sign_variations(iv.lo()),
                   chain.sign_variations(iv.hi()), 0});
  while (!stack.empty()) {
    Task t = std::move(stack.back());
    stack.pop_back();
    const std::size_t count = t.vlo - t.vhi;
    if (count == 0) continue;
    if (count == 1) {
      out.push_back({RationalInterval(t.lo, t.hi), chain.source_fingerprint()});
      continue;
    }
    if (t.depth >= cap) {
      throw CertificationError("isolate_roots: depth cap " +
                               std::to_string(cap) + " exceeded near " +
                               show(RationalInterval(t.lo, t.hi)));
    }
    // Midpoint, or a nearby dyadic split point if the midpoint is a root.
    const Rational width = t.hi - t.lo;
    Rational split = t.lo + width / Rational(2);
    for (unsigned k = 2; chain.source_sign(split) == 0; ++k) {
      split = t.lo + width * (Rational(1) / Rational(2) +
                              Rational(BigInt(1), pow(BigInt(2), k)));
    }
    const std::size_t vmid = chain.sign_variations(split);
    stack.push_back({split, t.hi, vmid, t.vhi, t.depth + 1});
    stack.push_back({t.lo, split, t.vlo, vmid, t.depth + 1});
  }
  if (out.size() != total) {
    throw CertificationError("isolate_roots: found " +
                             std::to_string(out.size()) + " of " +
                             std::to_string(total) + " roots");
  }
  return out;
}

RationalInterval nudge_off_roots(const SturmChain& chain,
                                 const RationalInterval& iv) {
  const bool lo_root = chain.source_sign(iv.lo()) == 0;
  const bool hi_root = chain.source_sign(iv.hi()) == 0;
  if (!lo_root && !hi_root) return iv;
  Rational norm = 1;
  for (const auto& c : chain.source().coefficients()) norm += c.abs();
  Rational delta = iv.width() / (Rational(2) * norm);
  auto shrink = [&](const Rational& d) {
    Rational lo = lo_root ? iv.lo() + d : iv.lo();
    Rational hi = hi_root ? iv.hi() - d : iv.hi();
    return RationalInterval(lo, hi);
  };
  auto usable = [&](const RationalInterval& c) {
    return chain.source_sign(c.lo()) != 0 && chain.source_sign(c.hi()) != 0;
  };
  RationalInterval current = shrink(delta);
  while (!usable(current)) {
    delta /= Rational(2);
    current = shrink(delta);
  }
  std::size_t count = count_roots(chain, current);
  for (;;) {
    delta /= Rational(2);
    RationalInterval next = shrink(delta);
    if (!usable(next)) continue;
    const std::size_t next_count = count_roots(chain, next);
    if (next_count == count) return next;
    current = std::move(next);
    count = next_count;
  }
}

IsolatedRoot refine(const IsolatedRoot& root, const Polynomial& p,
                    const Rational& rel_width) {
  if (rel_width.sign() <= 0) throw DomainError("refine: rel_width must be > 0");
  if (fingerprint(p) != root.source) {
    throw DomainError("refine: isolation belongs to a different polynomial");
  }
  if (root.interval.is_point()) return root;
  const IntPoly c = primitive_integer_coefficients(p);
  Rational lo = root.interval.lo();
  Rational hi = root.interval.hi();
  const int slo = integer_sign_at(c, lo);
  const int shi = integer_sign_at(c, hi);
  if (slo == 0 || shi == 0 || slo == shi) {
    throw DomainError("refine: interval " + show(root.interval) +
                      " does not bracket a sign change");
  }
  const std::size_t cap = depth_cap(c, root.interval) +
                          bit_length(rel_width.den()) +
                          bit_length(rel_width.num());
  for (std::size_t step = 0;; ++step) {
    const Rational scale = std::max(lo.abs(), hi.abs());
    if (hi - lo <= rel_width * scale) break;
    if (step >= cap) {
      throw CertificationError("refine: iteration cap exceeded at " +
                               show(RationalInterval(lo, hi)));
    }
    Rational mid = (lo + hi) / Rational(2);
    const int s = integer_sign_at(c, mid);
    if (s == 0) return {RationalInterval::point(mid), root.source};
    if (s == slo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return {RationalInterval(lo, hi), root.source};
}

IsolatedRoot smallest_magnitude_negative_root(const Polynomial& p,
                                              const Rational& rel_width) {
  if (p.is_zero() || p.coeff(0).is_zero()) {
    throw DomainError("smallest_magnitude_negative_root needs p(0) != 0");
  }
  const Rational c1 = p.coeff(1) / p.coeff(0);
  if (c1.sign() <= 0) {
    throw DomainError(
        "smallest_magnitude_negative_root needs a positive linear coefficient "
        "after normalizing p(0) = 1");
  }
  const Rational upper = -(Rational(2) * c1).inverse();
  const Rational lower = -1;
  if (upper <= lower) {
    throw CertificationError("no root of " + p.to_string() +
                             " can lie in (-1, 0): 1/c1 >= 1");
  }
  Polynomial work = p;
  while (sign_at(work, lower) == 0) work = deflate(work, lower);
  const SturmChain chain(work);
  if (chain.source_sign(upper) == 0) {
    throw CertificationError("root at the lemma guard " + upper.to_string());
  }
  RationalInterval window(lower, upper);
  std::size_t vlo = chain.sign_variations(window.lo());
  const std::size_t vhi = chain.sign_variations(window.hi());
  if (vlo <= vhi) {
    throw CertificationError(
        "no root in (-1, -1/(2 c1)] for " + p.to_string() +
        "; contradicts the first-coefficient bound");
  }
  // Descend toward the rightmost root: keep the right half whenever it still
  // holds a root.
  const std::size_t cap = depth_cap(to_int_poly(chain.source()), window);
  Rational lo = window.lo();
  Rational hi = window.hi();
  for (std::size_t depth = 0; vlo - vhi > 1; ++depth) {
    if (depth >= cap) {
      throw CertificationError("smallest_magnitude_negative_root: depth cap");
    }
    const Rational width = hi - lo;
    Rational split = lo + width / Rational(2);
    for (unsigned k = 2; chain.source_sign(split) == 0; ++k) {
      split = lo + width * (Rational(1) / Rational(2) +
                            Rational(BigInt(1), pow(BigInt(2), k)));
    }
    const std::size_t vmid = chain.sign_variations(split);
    if (vmid > vhi) {
      lo = std::move(split);
      vlo = vmid;
    } else {
      hi = std::move(split);
    }
  }
  // The left end may still be the divided-out root at -1; bisect on the
  // deflated polynomial until it is not.
  const int slo = chain.source_sign(lo);
  while (sign_at(p, lo) == 0) {
    Rational mid = (lo + hi) / Rational(2);
    const int s = chain.source_sign(mid);
    if (s == 0) return {RationalInterval::point(mid), fingerprint(p)};
    if (s == slo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  const IsolatedRoot isolated{RationalInterval(lo, hi), fingerprint(p)};
  return refine(isolated, p, rel_width);
}

}  // namespace eulerzeros
