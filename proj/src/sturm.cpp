#include "conjforge/sturm.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "conjforge/errors.hpp"

namespace conjforge {
namespace {

// Polynomial over Q, lowest degree first, no trailing zeros.
struct RatPoly {
  std::vector<Rat> c;

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  void normalize() {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  }
};

RatPoly to_rat(const IntPolynomial& f) {
  RatPoly out;
  out.c.reserve(f.coefficients().size());
  for (const Int& a : f.coefficients()) out.c.emplace_back(a);
  return out;
}

RatPoly derivative(const RatPoly& f) {
  RatPoly out;
  for (std::size_t i = 1; i < f.c.size(); ++i)
    out.c.push_back(f.c[i] * Rat(static_cast<unsigned long>(i)));
  out.normalize();
  return out;
}

Rat eval(const RatPoly& f, const Rat& x) {
  Rat acc(0);
  for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Remainder of a by b (b nonzero).
RatPoly rem(RatPoly a, const RatPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Rat q = a.c.back() / b.c.back();
    const std::size_t shift = a.c.size() - b.c.size();
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[shift + i] -= q * b.c[i];
    a.normalize();  // leading term cancels; lower ones may too
  }
  return a;
}

RatPoly monic_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Rat lead = a.c.back();
    for (Rat& x : a.c) x /= lead;
  }
  return a;
}

// f, f', then negated remainders until zero.
std::vector<RatPoly> sturm_chain(const RatPoly& f) {
  std::vector<RatPoly> chain;
  chain.push_back(f);
  RatPoly d = derivative(f);
  if (d.is_zero()) return chain;
  chain.push_back(std::move(d));
  while (true) {
    RatPoly r = rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    for (Rat& x : r.c) x = -x;
    chain.push_back(std::move(r));
  }
  return chain;
}

unsigned sign_variations(const std::vector<int>& signs) {
  unsigned v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

unsigned variations_at(const std::vector<RatPoly>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const RatPoly& g : chain) signs.push_back(sgn(eval(g, x)));
  return sign_variations(signs);
}

unsigned variations_at_infinity(const std::vector<RatPoly>& chain,
                                bool negative) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const RatPoly& g : chain) {
    if (g.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = sgn(g.c.back());
    if (negative && g.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return sign_variations(signs);
}

RatPoly squarefree_part(const RatPoly& f) {
  RatPoly d = derivative(f);
  if (d.is_zero()) {
    // constant f
    return f;
  }
  RatPoly g = monic_gcd(f, d);
  if (g.degree() == 0) return f;
  // exact division f / g
  RatPoly quot;
  RatPoly r = f;
  quot.c.assign(f.c.size() - g.c.size() + 1, Rat(0));
  while (!r.is_zero() && r.degree() >= g.degree()) {
    Rat q = r.c.back() / g.c.back();
    const std::size_t shift = r.c.size() - g.c.size();
    quot.c[shift] = q;
    for (std::size_t i = 0; i < g.c.size(); ++i) r.c[shift + i] -= q * g.c[i];
    r.normalize();
  }
  quot.normalize();
  return quot;
}

const Rat kMaxWidth = Rat(1, 64);

// Fractions of the subinterval at which to try splitting, in order, until
// the value there is nonzero. Distinct by construction, so at most deg f
// of them can be roots.
Rat split_fraction(unsigned attempt) {
  if (attempt == 0) return Rat(1, 2);
  return Rat(attempt, 2 * attempt + 1);
}

}  // namespace

bool is_squarefree_over_q(const IntPolynomial& f) {
  if (f.is_zero()) return false;
  if (f.degree() == 0) return true;
  RatPoly rf = to_rat(f);
  RatPoly g = monic_gcd(rf, derivative(rf));
  return g.degree() == 0;
}

unsigned sturm_real_root_count(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (f.degree() == 0) return 0;
  RatPoly sf = squarefree_part(to_rat(f));
  if (sf.degree() <= 0) return 0;
  auto chain = sturm_chain(sf);
  return variations_at_infinity(chain, true) -
         variations_at_infinity(chain, false);
}

unsigned sturm_real_root_count_in(const IntPolynomial& f, const Rat& lo,
                                  const Rat& hi) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (f.degree() == 0) return 0;
  RatPoly sf = squarefree_part(to_rat(f));
  if (sf.degree() <= 0) return 0;
  if (sgn(eval(sf, lo)) == 0 || sgn(eval(sf, hi)) == 0)
    throw std::invalid_argument("interval endpoint is a root");
  auto chain = sturm_chain(sf);
  return variations_at(chain, lo) - variations_at(chain, hi);
}

Rat cauchy_root_bound(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  Rat best(0);
  Int lead = abs(f.leading());
  for (std::size_t i = 0; i + 1 < f.coefficients().size(); ++i) {
    Int a = abs(f.coefficients()[i]);
    Rat t = Rat(a) / Rat(lead);
    if (t > best) best = t;
  }
  return Rat(best + 1);
}

RootIsolation isolate_real_roots(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (!is_squarefree_over_q(f)) throw NotSquarefreeError();
  RootIsolation out;
  if (f.degree() == 0) return out;

  RatPoly rf = to_rat(f);
  auto chain = sturm_chain(rf);
  auto count_between = [&](const Rat& a, const Rat& b) {
    return variations_at(chain, a) - variations_at(chain, b);
  };
  auto value_sign = [&](const Rat& x) { return sgn(eval(rf, x)); };

  // A point strictly between a and b where f does not vanish.
  auto split_at = [&](const Rat& a, const Rat& b) {
    for (unsigned attempt = 0;; ++attempt) {
      Rat m = a + (b - a) * split_fraction(attempt);
      if (value_sign(m) != 0) return m;
    }
  };

  // Exactly one root in (a, b); shrink to width < 1/64.
  auto refine = [&](Rat a, Rat b) {
    while (b - a >= kMaxWidth) {
      Rat m = (a + b) / 2;
      int s = value_sign(m);
      if (s == 0) {
        // the root is m itself; wrap it tightly (no other root is inside)
        Rat w(1, 130);
        Rat lo = Rat(m - w);
        Rat hi = Rat(m + w);
        if (lo < a) lo = a;
        if (hi > b) hi = b;
        return std::make_pair(lo, hi);
      }
      if (count_between(a, m) == 1)
        b = m;
      else
        a = m;
    }
    return std::make_pair(a, b);
  };

  const Rat bound = cauchy_root_bound(f);
  std::deque<std::pair<Rat, Rat>> work;
  work.emplace_back(-bound, bound);
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    unsigned n = count_between(a, b);
    if (n == 0) continue;
    if (n == 1) {
      out.intervals.push_back(refine(a, b));
      continue;
    }
    Rat m = split_at(a, b);
    work.emplace_back(a, m);
    work.emplace_back(m, b);
  }
  std::sort(out.intervals.begin(), out.intervals.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace conjforge
