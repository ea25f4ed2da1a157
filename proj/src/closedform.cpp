#include "cayley/closedform.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cayley/error.hpp"
#include "cayley/numtheory.hpp"

namespace cayley::closedform {
namespace {

using u64 = std::uint64_t;

// (1 + x^a)^e
IntPoly P(u64 a, u64 e) { return IntPoly::one_plus_x_pow(a).pow(static_cast<unsigned>(e)); }

const IntPoly& one() {
  static const IntPoly p = IntPoly::constant(1);
  return p;
}
const IntPoly& one_plus_x() {
  static const IntPoly p{1, 1};
  return p;
}
const IntPoly& x() {
  static const IntPoly p{0, 1};
  return p;
}

BigInt big(u64 v) { return BigInt(static_cast<unsigned long>(v)); }

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

void require_odd_prime(u64 p, const char* who) {
  if (p < 3 || !nt::is_prime(p)) throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
}

IntPoly divide(const IntPoly& p, u64 c, const char* who) {
  try {
    return p.divide_exact(big(c));
  } catch (const InternalError& e) {
    throw InternalError(std::string(who) + ": " + e.what());
  }
}

u64 ipow(u64 b, unsigned e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

IntPoly psi_equiv_abelian(const GroupTable& g) {
  if (!g.is_abelian()) throw std::invalid_argument("psi_equiv_abelian: group is not abelian");
  IntPoly out;
  for (const auto& k : lattice_moebius(g, subgroups(g))) {
    if (k.moebius == 0) continue;
    u64 inv = 0;
    k.members.for_each([&](Element e) { inv += g.is_involution(e); });
    const u64 pairs = (k.order() - inv - 1) / 2;
    out += (P(2, pairs) * P(1, inv) - one()).scale(static_cast<long>(k.moebius));
  }
  return out;
}

IntPoly psi_equiv_cyclic(u64 n) {
  if (n < 2) throw std::invalid_argument("psi_equiv_cyclic: n must be at least 2");
  IntPoly out;
  for (u64 d : nt::divisors(n)) {
    const int mu = nt::moebius_int(n / d);
    if (mu) out += (P(2, (d - 1) / 2) * P(1, d % 2 == 0) - one()).scale(mu);
  }
  return out;
}

IntPoly psi_equiv_dihedral(u64 n, Variant v) {
  if (n < 3) throw std::invalid_argument("psi_equiv_dihedral: n must be at least 3");
  IntPoly sum;
  for (u64 m : nt::divisors(n)) {
    const u64 q = n / m;
    const int mu = nt::moebius_int(q);
    if (!mu) continue;
    const u64 gamma = (m - 1) / 2;
    const IntPoly rot = P(2, gamma) * P(1, m % 2 == 0);  // symmetric subsets of Z_m
    IntPoly inner;
    for (u64 k = 1; k <= n; ++k) {
      inner += (rot - one()).scale(-2 * static_cast<long>(q));
      for (u64 l = 1; l <= q; ++l) {
        // conjugation fixing a: reflections shift by 2k
        if ((2 * k) % q == 0) {
          const u64 c = gcd(2 * k * m / n, m);
          inner += rot * P(m / c, c) - one();
        } else {
          inner += rot - one();
        }
        // conjugation inverting a: reflections s -> c - s
        const u64 shift = (2 * k + 2 * n - 2 * l) % (2 * n);  // 2(k - l) mod 2n
        if (shift % q == 0) {
          if (v == Variant::kLiteral) {
            inner += rot * P(2, gamma) * P(1, m % 2 == 0 ? 2 : 1) - one();
          } else {
            const u64 c = (shift / q) % m;
            const u64 fixed = m % 2 ? 1 : (c % 2 == 0 ? 2 : 0);
            inner += rot * P(2, (m - fixed) / 2) * P(1, fixed) - one();
          }
        } else {
          inner += rot - one();
        }
      }
    }
    sum += inner.scale(mu);
  }
  return divide(sum, 2 * n, "psi_equiv_dihedral");
}

BigInt count_equiv_dihedral(u64 n, Variant v) { return psi_equiv_dihedral(n, v).eval(1); }

IntPoly psi_weak_cyclic_2m(unsigned m) {
  if (m < 2) throw std::invalid_argument("psi_weak_cyclic_2m: m must be at least 2");
  IntPoly sum;
  for (unsigned t = 0; t + 2 <= m; ++t) {
    IntPoly term = (P(u64{2} << t, ipow(2, m - t - 2)) - one()) * one_plus_x();
    for (unsigned s = t + 1; s + 2 <= m; ++s) term *= P(2, ipow(2, m - s - 2));
    for (unsigned s = 1; s <= t; ++s) term *= P(ipow(2, t - s + 1), ipow(2, m - t - 2));
    sum += term.scale(big(nt::euler_phi(ipow(2, t))));
  }
  return divide(sum, ipow(2, m - 2), "psi_weak_cyclic_2m");
}

namespace {

// prod_{k=1}^{m-1} (1 + x^{phi(p^{m-k}) / g_k})^{g_k}, g_k = (d, phi(p^{m-k})/2)
IntPoly level_product(u64 p, unsigned m, u64 d, unsigned power = 1) {
  IntPoly out = one();
  for (unsigned k = 1; k < m; ++k) {
    const u64 ph = nt::euler_phi(ipow(p, m - k));
    const u64 g = gcd(d, ph / 2);
    out *= P(ph / g, power * g);
  }
  return out;
}

}  // namespace

IntPoly psi_weak_cyclic_pm(u64 p, unsigned m) {
  require_odd_prime(p, "psi_weak_cyclic_pm");
  if (m < 1) throw std::invalid_argument("psi_weak_cyclic_pm: m must be at least 1");
  const u64 ph = nt::euler_phi(ipow(p, m)), h = ph / 2;
  IntPoly sum;
  for (u64 d : nt::divisors(h))
    sum += ((P(ph / d, d) - one()) * level_product(p, m, d)).scale(big(nt::euler_phi(h / d)));
  return divide(sum, h, "psi_weak_cyclic_pm");
}

IntPoly psi_weak_cyclic_2pm(u64 p, unsigned m) {
  require_odd_prime(p, "psi_weak_cyclic_2pm");
  if (m < 1) throw std::invalid_argument("psi_weak_cyclic_2pm: m must be at least 1");
  const u64 ph = nt::euler_phi(ipow(p, m)), h = ph / 2;
  IntPoly sum;
  for (u64 d : nt::divisors(h)) {
    const IntPoly top = P(ph / d, d);
    const IntPoly levels = level_product(p, m, d);
    IntPoly term = (top - one()) * top * level_product(p, m, d, 2) * one_plus_x();
    term += (top - one()) * (levels * one_plus_x() - one()) * levels;
    sum += term.scale(big(nt::euler_phi(h / d)));
  }
  return divide(sum, h, "psi_weak_cyclic_2pm");
}

IntPoly psi_weak_cyclic_4p(u64 p) {
  require_odd_prime(p, "psi_weak_cyclic_4p");
  const u64 r = p - 1, h = r / 2;
  const IntPoly q2 = P(2, 1) * one_plus_x();  // (1+x^2)(1+x)
  IntPoly sum;
  for (u64 d : nt::divisors(r)) {
    const u64 e = gcd(h + d, r), g = gcd(d, h);
    const IntPoly odd_part = P(r / g, 2 * g);
    IntPoly term = (P(2 * r / d, d) + P(2 * r / e, e)) * odd_part * q2;
    term -= (odd_part * one_plus_x()).scale(2);
    term -= q2.scale(2);
    term += one_plus_x().scale(2);
    sum += term.scale(big(nt::euler_phi(r / d)));
  }
  return divide(sum, 2 * r, "psi_weak_cyclic_4p");
}

u64 alpha_exponent(const std::vector<u64>& ds, const std::vector<u64>& primes) {
  if (ds.empty() || ds.size() != primes.size())
    throw std::invalid_argument("alpha_exponent: need one divisor per prime and at least one prime");
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (primes[i] < 3 || ds[i] == 0 || (primes[i] - 1) % ds[i] != 0)
      throw std::invalid_argument("alpha_exponent: d_i must divide p_i - 1 for odd primes p_i");
  }
  if (ds.size() == 1) return (primes[0] - 1) / gcd(ds[0], (primes[0] - 1) / 2);

  u64 l = 1, period = 1;
  bool halves = true;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const u64 r = primes[i] - 1;
    l = std::lcm(l, r / ds[i]);
    period = std::lcm(period, r);
    halves = halves && (r / 2) % ds[i] == 0;
  }
  if (!halves) return 2 * l;
  for (u64 c = 0; c < period; ++c) {
    bool ok = true;
    for (std::size_t i = 0; i < ds.size() && ok; ++i) {
      const u64 r = primes[i] - 1;
      ok = (c % r) * ds[i] % r == r / 2;
    }
    if (ok) return l;
  }
  return 2 * l;
}

IntPoly psi_weak_cyclic_squarefree(const SquareFreeSpec& spec, Variant v) {
  const auto& ps = spec.odd_primes;
  const std::size_t l = ps.size();
  if (l == 0) throw std::invalid_argument("psi_weak_cyclic_squarefree: need at least one odd prime");
  if (l > 16) throw std::invalid_argument("psi_weak_cyclic_squarefree: too many primes");
  for (std::size_t i = 0; i < l; ++i) {
    require_odd_prime(ps[i], "psi_weak_cyclic_squarefree");
    if (i && ps[i] <= ps[i - 1]) throw std::invalid_argument("psi_weak_cyclic_squarefree: primes must increase");
  }

  std::vector<std::vector<u64>> divs(l);
  for (std::size_t i = 0; i < l; ++i) divs[i] = nt::divisors(ps[i] - 1);
  const unsigned full = (1u << l) - 1;

  IntPoly sum;
  std::vector<std::size_t> pick(l, 0);
  for (;;) {
    std::vector<u64> d(l);
    BigInt weight = 1;
    for (std::size_t i = 0; i < l; ++i) {
      d[i] = divs[i][pick[i]];
      weight *= big(nt::euler_phi((ps[i] - 1) / d[i]));
    }
    // f over each nonempty index subset, then F over each kept subset.
    std::vector<IntPoly> f(full + 1, one());
    for (unsigned s = 1; s <= full; ++s) {
      std::vector<u64> sd, sp;
      u64 prod = 1;
      for (std::size_t i = 0; i < l; ++i)
        if (s >> i & 1u) sd.push_back(d[i]), sp.push_back(ps[i]), prod *= ps[i] - 1;
      const u64 a = alpha_exponent(sd, sp);
      if (prod % a) throw InternalError("psi_weak_cyclic_squarefree: orbit length does not divide the group order");
      f[s] = P(a, prod / a);
    }
    IntPoly inner;
    for (unsigned removed = 0; removed <= full; ++removed) {
      const unsigned kept = full & ~removed;
      IntPoly big_f = one();
      for (unsigned s = kept; s; s = (s - 1) & kept) big_f *= f[s];
      const int sign = std::popcount(removed) % 2 ? -1 : 1;
      if (!spec.include_factor_two) {
        inner += big_f.scale(sign);
      } else if (kept) {
        inner += (one_plus_x() * big_f * big_f - big_f).scale(sign);
      } else {
        inner += (v == Variant::kLiteral ? one_plus_x() : x()).scale(sign);
      }
    }
    sum += inner.scale(weight);

    std::size_t i = 0;
    while (i < l && ++pick[i] == divs[i].size()) pick[i++] = 0;
    if (i == l) break;
  }
  u64 phi_n = 1;
  for (u64 p : ps) phi_n *= p - 1;
  return divide(sum, phi_n, "psi_weak_cyclic_squarefree");
}

IntPoly psi_weak_zp(u64 p) {
  require_odd_prime(p, "psi_weak_zp");
  const u64 h = (p - 1) / 2;
  IntPoly sum;
  for (u64 d : nt::divisors(h)) sum += (P((p - 1) / d, d) - one()).scale(big(nt::euler_phi(h / d)));
  return divide(sum, h, "psi_weak_zp");
}

IntPoly psi_weak_z2p(u64 p) {
  require_odd_prime(p, "psi_weak_z2p");
  const u64 h = (p - 1) / 2;
  IntPoly sum;
  for (u64 d : nt::divisors(h)) {
    const IntPoly top = P((p - 1) / d, d);
    sum += (top * (top * one_plus_x() - one())).scale(big(nt::euler_phi(h / d)));
  }
  return divide(sum, h, "psi_weak_z2p") - x();
}

IntPoly psi_weak_dihedral_p(u64 p, Variant v) {
  require_odd_prime(p, "psi_weak_dihedral_p");
  const u64 r = p - 1, h = r / 2;
  IntPoly sum = P(2, h) * (P(1, p) + IntPoly::monomial(p, big(r)) - one()) - x().scale(big(p));
  if (v == Variant::kLiteral) {
    for (u64 d : nt::divisors(h)) {
      const u64 g = gcd(d, h);
      IntPoly term = P(r / g, g) * (P(r / d, d) * one_plus_x() - one()) - x();
      sum += term.scale(big(nt::euler_phi(h)));
    }
  } else {
    for (u64 d : nt::divisors(r)) {
      if (d == r) continue;
      const u64 g = gcd(d, h);
      IntPoly term = P(r / g, g) * (P(r / d, d) * one_plus_x() - one()) - x();
      sum += term.scale(big(p * nt::euler_phi(r / d)));
    }
  }
  return divide(sum, p * r, "psi_weak_dihedral_p");
}

}  // namespace cayley::closedform
