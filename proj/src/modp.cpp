#include "conjforge/modp.hpp"

#include <algorithm>
#include <stdexcept>

#include "conjforge/errors.hpp"

namespace conjforge {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 base, u64 exp, u64 p) {
  u64 out = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) out = mulmod(out, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return out;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

bool miller_rabin(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  // deterministic for 64-bit inputs with this base set
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

u64 next_prime(u64 n) {
  if (n <= 2) return 2;
  if (n % 2 == 0) ++n;
  while (!is_prime(n)) n += 2;
  return n;
}

ModPoly::ModPoly(u64 p, std::vector<u64> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  for (u64& c : coeffs_) c %= p_;
  normalize();
}

void ModPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ModPoly ModPoly::reduce(const IntPolynomial& f, u64 p) {
  ModPoly out(p);
  out.coeffs_.reserve(f.coefficients().size());
  for (const Int& c : f.coefficients()) {
    Int m = c % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    out.coeffs_.push_back(m.get_ui());
  }
  out.normalize();
  return out;
}

u64 ModPoly::eval(u64 x) const {
  u64 acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = (mulmod(acc, x, p_) + *it) % p_;
  return acc;
}

ModPoly ModPoly::monic() const {
  if (is_zero() || coeffs_.back() == 1) return *this;
  ModPoly out(p_);
  out.coeffs_.reserve(coeffs_.size());
  u64 inv = invmod(coeffs_.back(), p_);
  for (u64 c : coeffs_) out.coeffs_.push_back(mulmod(c, inv, p_));
  return out;
}

ModPoly ModPoly::derivative() const {
  ModPoly out(p_);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.coeffs_.push_back(mulmod(coeffs_[i], i % p_, p_));
  out.normalize();
  return out;
}

ModPoly ModPoly::operator*(const ModPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return ModPoly(p_);
  ModPoly out(p_);
  out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out.coeffs_[i + j] =
          (out.coeffs_[i + j] + mulmod(coeffs_[i], rhs.coeffs_[j], p_)) % p_;
    }
  }
  out.normalize();
  return out;
}

ModPoly ModPoly::operator-(const ModPoly& rhs) const {
  ModPoly out(p_);
  out.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
    out.coeffs_[i] = (coeff(i) + p_ - rhs.coeff(i)) % p_;
  out.normalize();
  return out;
}

ModPoly ModPoly::mod(const ModPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero");
  ModPoly d = divisor.monic();
  ModPoly r = *this;
  while (!r.is_zero() && r.degree() >= d.degree()) {
    u64 q = r.coeffs_.back();
    std::size_t shift = r.coeffs_.size() - d.coeffs_.size();
    for (std::size_t i = 0; i < d.coeffs_.size(); ++i) {
      r.coeffs_[shift + i] =
          (r.coeffs_[shift + i] + p_ - mulmod(q, d.coeffs_[i], p_)) % p_;
    }
    r.normalize();
  }
  return r;
}

ModPoly ModPoly::pow_mod(const Int& exponent, const ModPoly& divisor) const {
  ModPoly base = this->mod(divisor);
  ModPoly out(p_, {1});
  out = out.mod(divisor);
  Int e = exponent;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) out = (out * base).mod(divisor);
    base = (base * base).mod(divisor);
    e >>= 1;
  }
  return out;
}

IntPolynomial ModPoly::to_int_polynomial() const {
  std::vector<Int> coeffs;
  coeffs.reserve(coeffs_.size());
  for (u64 c : coeffs_) coeffs.emplace_back(static_cast<unsigned long>(c));
  return IntPolynomial(std::move(coeffs));
}

ModPoly gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_squarefree_mod(const IntPolynomial& f, u64 p) {
  if (!is_prime(p)) throw NotPrimeError(p);
  ModPoly fp = ModPoly::reduce(f, p);
  if (fp.degree() < 1) return false;
  ModPoly d = fp.derivative();
  if (d.is_zero()) return false;
  return gcd(fp, d).degree() == 0;
}

DegreePattern degree_pattern_mod(const IntPolynomial& f, u64 p) {
  if (!is_prime(p)) throw NotPrimeError(p);
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  ModPoly fp = ModPoly::reduce(f, p);
  if (fp.degree() != f.degree())
    throw std::invalid_argument("leading coefficient vanishes mod p");
  if (!is_squarefree_mod(f, p)) throw NotSquarefreeModPError(p);

  // distinct-degree splitting: successive gcds with X^{p^i} - X
  DegreePattern pattern;
  ModPoly rest = fp.monic();
  ModPoly x = ModPoly::x(p);
  ModPoly h = x.mod(rest);
  unsigned i = 0;
  while (rest.degree() > 0 && 2 * static_cast<int>(i + 1) <= rest.degree()) {
    ++i;
    h = h.pow_mod(Int(static_cast<unsigned long>(p)), rest);
    ModPoly g = gcd(h - x.mod(rest), rest);
    if (g.degree() > 0) {
      for (int k = 0; k < g.degree() / static_cast<int>(i); ++k)
        pattern.push_back(i);
      // rest := rest / g, long division of monic by monic
      {
        std::vector<u64> num = rest.coefficients();
        const std::vector<u64>& den = g.coefficients();
        std::vector<u64> q(num.size() - den.size() + 1, 0);
        for (std::size_t k = q.size(); k-- > 0;) {
          u64 lead = num[k + den.size() - 1];
          q[k] = lead;
          if (lead != 0) {
            for (std::size_t j = 0; j < den.size(); ++j) {
              u64 prod = mulmod(lead, den[j], p);
              num[k + j] = (num[k + j] + p - prod) % p;
            }
          }
        }
        rest = ModPoly(p, std::move(q));
      }
      h = h.mod(rest);
    }
  }
  if (rest.degree() > 0) pattern.push_back(static_cast<unsigned>(rest.degree()));
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

bool is_irreducible_mod(const IntPolynomial& f, u64 p) {
  if (!is_prime(p)) throw NotPrimeError(p);
  ModPoly fp = ModPoly::reduce(f, p);
  if (fp.degree() != f.degree())
    throw std::invalid_argument("leading coefficient vanishes mod p");
  if (fp.degree() < 1) return false;
  if (fp.degree() == 1) return true;
  ModPoly x = ModPoly::x(p);
  ModPoly h = x.mod(fp);
  for (int i = 1; 2 * i <= fp.degree(); ++i) {
    h = h.pow_mod(Int(static_cast<unsigned long>(p)), fp);
    if (gcd(h - x.mod(fp), fp).degree() != 0) return false;
  }
  return true;
}

IntPolynomial random_monic_irreducible_mod(u64 p, unsigned degree,
                                           SplitMix64& rng) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  while (true) {
    std::vector<u64> coeffs(degree + 1, 0);
    for (unsigned i = 0; i < degree; ++i) coeffs[i] = rng.below(p);
    coeffs[degree] = 1;
    ModPoly candidate(p, std::move(coeffs));
    IntPolynomial lifted = candidate.to_int_polynomial();
    if (lifted.degree() == static_cast<int>(degree) &&
        is_irreducible_mod(lifted, p))
      return lifted;
  }
}

std::optional<std::vector<u64>> split_residues(const IntPolynomial& f, u64 p) {
  if (!is_prime(p)) throw NotPrimeError(p);
  if (f.is_zero() || f.degree() < 1) return std::nullopt;
  ModPoly fp = ModPoly::reduce(f, p);
  if (fp.degree() != f.degree()) return std::nullopt;
  if (!is_squarefree_mod(f, p)) return std::nullopt;
  // completely split iff f | X^p - X, i.e. X^p = X mod f
  ModPoly x = ModPoly::x(p);
  ModPoly frob = x.pow_mod(Int(static_cast<unsigned long>(p)), fp);
  if (!(frob == x.mod(fp))) return std::nullopt;
  std::vector<u64> roots;
  const unsigned d = static_cast<unsigned>(f.degree());
  for (u64 r = 0; r < p && roots.size() < d; ++r) {
    if (fp.eval(r) == 0) roots.push_back(r);
  }
  if (roots.size() != d) return std::nullopt;  // unreachable for split f
  return roots;
}

}  // namespace conjforge
