#include "cayley_census/verify.hpp"

#include "cayley_census/arith.hpp"
#include "cayley_census/census.hpp"
#include "cayley_census/cycles.hpp"
#include "cayley_census/dihedral.hpp"
#include "cayley_census/errors.hpp"
#include "cayley_census/oracle.hpp"

#include <chrono>
#include <exception>
#include <numeric>
#include <random>
#include <sstream>

namespace cayley_census::verify {

Formulas Formulas::reference() {
  Formulas f;
  f.euler_phi = arith::euler_phi;
  f.mult_order = arith::mult_order;
  f.kappa = cayley_census::kappa;
  f.c_u_total = cayley_census::c_u_total;
  f.c_v_general = cayley_census::c_v_general;
  f.c_v_squarefree = cayley_census::c_v_squarefree;
  f.lambda_set = d6p::lambda_set;
  f.s_sum = d6p::s_sum;
  f.kappa_3p = d6p::kappa_3p;
  f.c_u3p = d6p::c_u3p;
  f.c_v3p = d6p::c_v3p;
  f.d6p_count = d6p::d6p_count;
  return f;
}

bool Report::passed() const {
  for (const CheckResult& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

int Report::exit_code() const { return passed() ? 0 : 3; }

namespace {

using arith::gcd;

// Collects case outcomes for one check; keeps the first failure message.
class Recorder {
 public:
  explicit Recorder(CheckResult& result) : result_(result) {}

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (ok || !result_.passed) {
      if (!ok) result_.passed = false;
      return;
    }
    result_.passed = false;
    std::ostringstream os;
    describe(os);
    result_.detail = os.str();
  }

 private:
  CheckResult& result_;
};

struct Context {
  const Options& options;
  const Formulas& f;
};

using CheckFn = void (*)(const Context&, Recorder&);

std::vector<std::int64_t> units(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t r = 0; r < n; ++r) {
    if (gcd(r, n) == 1) out.push_back(r);
  }
  return out;
}

std::int64_t brute_phi(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t i = 1; i <= n; ++i) c += gcd(i, n) == 1 ? 1 : 0;
  return c;
}

std::int64_t brute_order(std::int64_t r, std::int64_t n) {
  std::int64_t x = arith::mod(r, n);
  for (std::int64_t s = 1;; ++s, x = arith::mul_mod(x, r, n)) {
    if (x == 1 % n) return s;
  }
}

std::int64_t brute_geom_sum(std::int64_t r, std::int64_t m, std::int64_t n) {
  std::int64_t sum = 0;
  std::int64_t term = 1 % n;
  for (std::int64_t i = 0; i < m; ++i) {
    sum = (sum + term) % n;
    term = arith::mul_mod(term, r, n);
  }
  return sum;
}

// Coprime splits n = d m with 1 <= d <= m.
template <typename Visit>
void for_each_coprime_split(std::int64_t n, Visit&& visit) {
  for (const std::int64_t d : arith::divisors_of(n)) {
    const std::int64_t m = n / d;
    if (d <= m && gcd(d, m) == 1) visit(d, m);
  }
}

bool odd_squarefree(std::int64_t n) { return n >= 3 && n % 2 == 1 && arith::is_squarefree(n); }

Nat burnside_sum_from(const Formulas& f, std::int64_t n) {
  Nat sum;
  for (const std::int64_t r : units(n)) {
    const std::int64_t cu = f.c_u_total(n, r);
    for (std::int64_t t = 0; t < n; ++t) {
      sum += Nat::pow2(static_cast<std::uint64_t>(cu + f.c_v_general(n, r, t)));
    }
  }
  return sum;
}

Nat theorem_sum_from(const Formulas& f, std::int64_t n) {
  Nat sum;
  for (const std::int64_t t : arith::divisors_of(n)) {
    Nat inner;
    for (const std::int64_t r : units(n)) {
      if (r == 0) continue;
      inner += Nat::pow2(static_cast<std::uint64_t>(f.c_u_total(n, r) + f.c_v_squarefree(n, r, t % n)));
    }
    sum += Nat(static_cast<std::uint64_t>(arith::euler_phi(n / t))) * inner;
  }
  return sum;
}

// --- arithmetic -------------------------------------------------------------

void check_arith_bruteforce(const Context& ctx, Recorder& rec) {
  for (std::int64_t n = 1; n <= ctx.options.n_max; ++n) {
    const std::int64_t phi = ctx.f.euler_phi(n);
    rec.expect(phi == brute_phi(n), [&](auto& os) { os << "euler_phi(" << n << ") = " << phi; });
    for (const std::int64_t r : units(n)) {
      const std::int64_t ord = ctx.f.mult_order(r, n);
      rec.expect(ord == brute_order(r, n),
                 [&](auto& os) { os << "mult_order(" << r << ", " << n << ") = " << ord; });
    }
  }
}

void check_order_multiplicativity(const Context& ctx, Recorder& rec) {
  for (std::int64_t n = 1; n <= ctx.options.n_max; ++n) {
    for_each_coprime_split(n, [&](std::int64_t d, std::int64_t m) {
      for (const std::int64_t r : units(n)) {
        const std::int64_t od = ctx.f.mult_order(r, d);
        const std::int64_t om = ctx.f.mult_order(r, m);
        const std::int64_t on = ctx.f.mult_order(r, n);
        rec.expect(on == od * om / gcd(od, om), [&](auto& os) {
          os << "|" << r << "|_" << n << " = " << on << " but |r|_" << d << " = " << od
             << ", |r|_" << m << " = " << om;
        });
      }
    });
  }
}

void check_geom_sum(const Context& ctx, Recorder& rec) {
  for (std::int64_t n = 1; n <= ctx.options.n_max; ++n) {
    for (const std::int64_t r : units(n)) {
      const std::int64_t ord = ctx.f.mult_order(r, n);
      const std::int64_t s = arith::geom_sum_mod(r, static_cast<std::uint64_t>(ord), n).value;
      rec.expect(s == brute_geom_sum(r, ord, n) && arith::mul_mod(s, r - 1, n) == 0, [&](auto& os) {
        os << "S_" << ord << "(" << r << ") mod " << n << " = " << s;
      });
      for (const std::int64_t d : arith::divisors_of(n)) {
        const std::int64_t od = ctx.f.mult_order(r, d);
        for (std::int64_t l = 0; l <= 6; ++l) {
          for (std::int64_t k = 0; k <= 6; ++k) {
            const auto lhs = arith::geom_sum_mod(r, static_cast<std::uint64_t>(l * k * od), d).value;
            const auto base = arith::geom_sum_mod(r, static_cast<std::uint64_t>(k * od), d).value;
            rec.expect(lhs == arith::mul_mod(l, base, d), [&](auto& os) {
              os << "S_{lk|r|_d} reduction fails for n=" << n << " d=" << d << " r=" << r
                 << " l=" << l << " k=" << k;
            });
          }
        }
      }
    }
  }
}

// --- automorphisms ----------------------------------------------------------

void check_kappa_is_order(const Context& ctx, Recorder& rec) {
  for (std::int64_t n = 2; n <= ctx.options.n_max; ++n) {
    for (const Aut& a : enumerate_aut(n)) {
      const std::int64_t k = ctx.f.kappa(n, a.r(), a.t());
      std::int64_t least = 1;
      for (Aut x = a; !x.is_identity(); x = compose(x, a)) ++least;
      std::int64_t cycle_lcm = 1;
      for (const std::size_t len : to_permutation(a).cycle_lengths()) {
        cycle_lcm = std::lcm(cycle_lcm, static_cast<std::int64_t>(len));
      }
      const std::int64_t shift =
          arith::mul_mod(a.t(), arith::geom_sum_mod(a.r(), static_cast<std::uint64_t>(k), n).value, n);
      const bool coprime_shortcut = gcd(arith::mod(a.r() - 1, n), n) != 1 ||
                                    k == ctx.f.mult_order(a.r(), n);
      rec.expect(k == least && k == cycle_lcm && shift == 0 && coprime_shortcut, [&](auto& os) {
        os << "kappa(" << n << ", " << a.r() << ", " << a.t() << ") = " << k << ", order " << least
           << ", cycle lcm " << cycle_lcm;
      });
    }
  }
}

void check_homomorphism(const Context& ctx, Recorder& rec) {
  for (std::int64_t n = 2; n <= std::min<std::int64_t>(ctx.options.n_max, 20); ++n) {
    const std::vector<Aut> auts = enumerate_aut(n);
    std::vector<Permutation> perms;
    for (const Aut& a : auts) perms.push_back(to_permutation(a));
    for (std::size_t i = 0; i < auts.size(); ++i) {
      for (std::size_t j = 0; j < auts.size(); ++j) {
        const bool ok = to_permutation(compose(auts[i], auts[j])) == perms[i].then(perms[j]);
        rec.expect(ok, [&](auto& os) {
          os << "compose(a_{" << n << "," << auts[i].r() << "," << auts[i].t() << "}, a_{" << n
             << "," << auts[j].r() << "," << auts[j].t() << "}) is not the composed action";
        });
      }
    }
  }
}

void check_power_closed_form(const Context& ctx, Recorder& rec) {
  for (std::int64_t n = 1; n <= std::min<std::int64_t>(ctx.options.n_max, 20); ++n) {
    const std::int64_t limit = 2 * n * arith::euler_phi(n);
    for (const Aut& a : enumerate_aut(n)) {
      Aut iterated = Aut::identity(n);
      for (std::int64_t s = 0; s <= limit; ++s) {
        rec.expect(power(a, static_cast<std::uint64_t>(s)) == iterated, [&](auto& os) {
          os << "power(a_{" << n << "," << a.r() << "," << a.t() << "}, " << s << ")";
        });
        iterated = compose(iterated, a);
      }
    }
  }
}

void check_kappa_lemmas(const Context& ctx, Recorder& rec) {
  for (std::int64_t n = 1; n <= ctx.options.n_max; ++n) {
    for (const std::int64_t r : units(n)) {
      const std::int64_t on = ctx.f.mult_order(r, n);
      for (std::int64_t t = 0; t < n; ++t) {
        const std::int64_t kn = ctx.f.kappa(n, r, t);
        // t-class invariance
        const std::int64_t rep = gcd(t, n);
        rec.expect(kn == ctx.f.kappa(n, r, rep), [&](auto& os) {
          os << "kappa(" << n << "," << r << "," << t << ") != kappa at gcd(t,n) = " << rep;
        });
        for_each_coprime_split(n, [&](std::int64_t d, std::int64_t m) {
          const std::int64_t kd = ctx.f.kappa(d, r, t);
          const std::int64_t km = ctx.f.kappa(m, r, t);
          const std::int64_t expected = on * kd * km / (gcd(kd, on) * gcd(km, on));
          rec.expect(kn == expected && kn % kd == 0 && kn % km == 0, [&](auto& os) {
            os << "kappa multiplicativity fails: n=" << n << " d=" << d << " m=" << m << " r=" << r
               << " t=" << t << ": " << kn << " vs " << expected;
          });
        });
      }
    }
  }
}

void check_conjugation(const Context& ctx, Recorder& rec) {
  std::mt19937_64 rng(ctx.options.seed);
  for (std::int64_t n = 2; n <= ctx.options.n_max; ++n) {
    const std::vector<std::int64_t> us = units(n);
    // kappa table indexed [r][t]
    std::vector<std::vector<std::int64_t>> table(static_cast<std::size_t>(n));
    for (const std::int64_t r : us) {
      auto& row = table[static_cast<std::size_t>(r)];
      row.resize(static_cast<std::size_t>(n));
      for (std::int64_t t = 0; t < n; ++t) row[static_cast<std::size_t>(t)] = ctx.f.kappa(n, r, t);
    }
    std::uniform_int_distribution<std::size_t> pick_unit(0, us.size() - 1);
    std::uniform_int_distribution<std::int64_t> pick_y(0, n - 1);
    for (unsigned sample = 0; sample < ctx.options.conjugation_samples; ++sample) {
      const std::int64_t x = us[pick_unit(rng)];
      const std::int64_t y = pick_y(rng);
      for (const std::int64_t r : us) {
        const auto& row = table[static_cast<std::size_t>(r)];
        for (std::int64_t t = 0; t < n; ++t) {
          const std::int64_t t2 = arith::mod(arith::mul_mod(1 - r, y, n) + arith::mul_mod(x, t, n), n);
          rec.expect(row[static_cast<std::size_t>(t)] == row[static_cast<std::size_t>(t2)],
                     [&](auto& os) {
                       os << "kappa(" << n << "," << r << "," << t << ") != kappa(" << n << "," << r
                          << "," << t2 << ") for x=" << x << " y=" << y;
                     });
        }
      }
    }
  }
}

// --- cycle numbers ----------------------------------------------------------

void check_cycle_three_way(const Context& ctx, Recorder& rec) {
  for (std::int64_t n = 2; n <= ctx.options.n_max; ++n) {
    for (const Aut& a : enumerate_aut(n)) {
      const std::int64_t formula = ctx.f.c_u_total(n, a.r()) + ctx.f.c_v_general(n, a.r(), a.t());
      const Permutation perm = to_permutation(a);
      const auto by_cycles = static_cast<std::int64_t>(oracle::perm_cycle_count(perm));
      const auto by_fixpoints = static_cast<std::int64_t>(oracle::cycle_count_via_fixpoints(a));
      rec.expect(formula == by_cycles && by_cycles == by_fixpoints, [&](auto& os) {
        os << "c(a_{" << n << "," << a.r() << "," << a.t() << "}): formula " << formula
           << ", permutation " << by_cycles << ", fixed points " << by_fixpoints;
      });
    }
  }
}

void check_squarefree_theorem_total(const Context& ctx, Recorder& rec) {
  for (std::int64_t n = 2; n <= ctx.options.n_max; ++n) {
    if (!arith::is_squarefree(n)) continue;
    for (const Aut& a : enumerate_aut(n)) {
      const std::int64_t formula =
          ctx.f.c_u_total(n, a.r()) + ctx.f.c_v_squarefree(n, a.r(), gcd(a.t(), n));
      const auto perm = static_cast<std::int64_t>(oracle::perm_cycle_count(to_permutation(a)));
      rec.expect(formula == perm, [&](auto& os) {
        os << "square-free total for a_{" << n << "," << a.r() << "," << a.t() << "} = " << formula
           << ", permutation " << perm;
      });
    }
  }
}

void check_u_part_t_independence(const Context& ctx, Recorder& rec) {
  for (std::int64_t n = 2; n <= ctx.options.n_max; ++n) {
    for (const std::int64_t r : units(n)) {
      const std::int64_t expected = ctx.f.c_u_total(n, r);
      for (std::int64_t t = 0; t < n; ++t) {
        const Permutation perm = to_permutation(make_aut(n, r, t));
        // Rotations occupy indices 0 .. n-2 and are closed under the action.
        std::vector<bool> seen(static_cast<std::size_t>(n - 1), false);
        std::int64_t cycles = 0;
        for (std::uint32_t s = 0; s + 1 < static_cast<std::uint32_t>(n); ++s) {
          if (seen[s]) continue;
          ++cycles;
          for (std::uint32_t k = s; !seen[k]; k = perm(k)) seen[k] = true;
        }
        rec.expect(cycles == expected, [&](auto& os) {
          os << "rotation-block cycles of a_{" << n << "," << r << "," << t << "} = " << cycles
             << ", formula " << expected;
        });
      }
    }
  }
}

void check_c_v_t_class(const Context& ctx, Recorder& rec) {
  for (std::int64_t n = 1; n <= ctx.options.n_max; ++n) {
    for (const std::int64_t r : units(n)) {
      for (std::int64_t t = 0; t < n; ++t) {
        const std::int64_t rep = gcd(t, n) % n;
        const std::int64_t c = ctx.f.c_v_general(n, r, t);
        rec.expect(c == ctx.f.c_v_general(n, r, rep), [&](auto& os) {
          os << "c_v(" << n << "," << r << "," << t << ") depends on more than gcd(t, n)";
        });
      }
    }
  }
}

void check_c_v_squarefree_vs_general(const Context& ctx, Recorder& rec) {
  for (std::int64_t n = 2; n <= ctx.options.n_max; ++n) {
    if (!arith::is_squarefree(n)) continue;
    for (const std::int64_t r : units(n)) {
      for (std::int64_t t = 0; t < n; ++t) {
        const std::int64_t sf = ctx.f.c_v_squarefree(n, r, t);
        const std::int64_t gen = ctx.f.c_v_general(n, r, t);
        rec.expect(sf == gen, [&](auto& os) {
          os << "c_v(" << n << "," << r << "," << t << "): square-free " << sf << ", general " << gen;
        });
      }
    }
  }
}

// --- census -----------------------------------------------------------------

void check_burnside_divisibility(const Context& ctx, Recorder& rec) {
  for (std::int64_t n = 3; n <= ctx.options.n_max; ++n) {
    const Nat sum = burnside_sum_from(ctx.f, n);
    const Nat order(static_cast<std::uint64_t>(n * arith::euler_phi(n)));
    rec.expect(sum.divisible_by(order), [&](auto& os) {
      os << "Burnside sum for n=" << n << " is not divisible by " << order;
    });
  }
}

void check_theorem_vs_burnside(const Context& ctx, Recorder& rec) {
  for (std::int64_t n = 3; n <= ctx.options.n_max; ++n) {
    if (!odd_squarefree(n)) continue;
    const Nat burnside = burnside_sum_from(ctx.f, n);
    const Nat theorem = theorem_sum_from(ctx.f, n);
    rec.expect(burnside == theorem, [&](auto& os) {
      os << "n=" << n << ": Burnside sum " << burnside << ", divisor-weighted sum " << theorem;
    });
  }
}

void check_divisor_weights(const Context& ctx, Recorder& rec) {
  for (std::int64_t n = 1; n <= ctx.options.n_max; ++n) {
    for (const std::int64_t t : arith::divisors_of(n)) {
      // t = n is the class of t' = 0.
      const std::int64_t count = count_t_class(n, t);
      rec.expect(count == ctx.f.euler_phi(n / t), [&](auto& os) {
        os << "|{t' : gcd(t', " << n << ") = " << t << "}| = " << count;
      });
    }
  }
}

void check_powerset_orbits(const Context& ctx, Recorder& rec) {
  for (const std::int64_t n : ctx.options.orbit_ns) {
    if (n > ctx.options.n_max || n < 3) continue;
    oracle::OrbitOptions opts;
    opts.max_mask_bits = oracle::max_mask_bits_from_env();
    const Nat orbits = oracle::powerset_orbit_count(n, opts);
    const Nat burnside = burnside_sum_from(ctx.f, n);
    const Nat order(static_cast<std::uint64_t>(n * arith::euler_phi(n)));
    rec.expect(burnside == orbits * order, [&](auto& os) {
      os << "n=" << n << ": " << orbits << " orbits by enumeration, Burnside sum " << burnside;
    });
  }
}

void check_orbit_stabilizer(const Context& ctx, Recorder& rec) {
  const std::int64_t n = 5;
  if (ctx.options.n_max < n) return;
  std::mt19937_64 rng(ctx.options.seed ^ 0x5eedU);
  std::uniform_int_distribution<oracle::MaskWord> pick(0, (1U << (2 * n - 1)) - 1);
  const auto group_order = static_cast<std::size_t>(n * ctx.f.euler_phi(n));
  for (int i = 0; i < 100; ++i) {
    const oracle::SubsetMask mask(n, pick(rng));
    const std::size_t orbit = oracle::orbit_of(mask).size();
    const std::size_t stab = oracle::stabilizer_size(mask);
    rec.expect(orbit * stab == group_order, [&](auto& os) {
      os << "mask " << mask.bits() << ": |orbit| " << orbit << " x |stabilizer| " << stab;
    });
  }
}

// --- D_6p -------------------------------------------------------------------

void check_d6p_lemmas(const Context& ctx, Recorder& rec) {
  const Formulas& f = ctx.f;
  for (const std::int64_t p : ctx.options.d6p_primes) {
    const std::int64_t n = 3 * p;
    for (const std::int64_t r : units(n)) {
      if (r == 0) continue;
      rec.expect(f.c_u3p(p, r) == f.c_u_total(n, r),
                 [&](auto& os) { os << "c_U(3p) table at p=" << p << " r=" << r; });
      for (const std::int64_t t : {std::int64_t{1}, std::int64_t{3}, p, n}) {
        std::int64_t s_total = 0;
        for (const std::int64_t d : {std::int64_t{1}, std::int64_t{3}, p, n}) {
          rec.expect(f.lambda_set(p, d, r, t) == d6p::lambda_set_by_definition(p, d, r, t),
                     [&](auto& os) {
                       os << "Lambda(" << d << "," << r << "," << t << ") at p=" << p;
                     });
          const std::int64_t s = f.s_sum(p, d, r, t);
          rec.expect(s == d6p::s_sum_by_definition(p, d, r, t), [&](auto& os) {
            os << "S(" << d << "," << r << "," << t << ") at p=" << p << " = " << s;
          });
          s_total += s;
        }
        const std::int64_t cv = f.c_v_general(n, r, t % n);
        const std::int64_t k = f.kappa(n, r, t % n);
        rec.expect(f.c_v3p(p, r, t) == cv,
                   [&](auto& os) { os << "c_V(3p) table at p=" << p << " r=" << r << " t=" << t; });
        rec.expect(f.kappa_3p(p, r, t) == k,
                   [&](auto& os) { os << "kappa(3p) table at p=" << p << " r=" << r << " t=" << t; });
        rec.expect(cv * k == s_total, [&](auto& os) {
          os << "c_V(3p) * kappa != sum of S at p=" << p << " r=" << r << " t=" << t;
        });
      }
    }
  }
}

void check_d6p_count(const Context& ctx, Recorder& rec) {
  for (const std::int64_t p : ctx.options.d6p_primes) {
    const std::int64_t n = 3 * p;
    const Nat closed = ctx.f.d6p_count(p);
    const Nat order(static_cast<std::uint64_t>(n * arith::euler_phi(n)));
    const Nat theorem = theorem_sum_from(ctx.f, n);
    const Nat burnside = burnside_count(n).burnside_sum;
    rec.expect(closed * order == theorem && theorem == burnside, [&](auto& os) {
      os << "p=" << p << ": closed form " << closed << " vs theorem " << theorem.ceil_div(order)
         << " vs Burnside " << burnside.ceil_div(order);
    });
  }
}

struct NamedCheck {
  const char* name;
  CheckFn fn;
};

const std::vector<NamedCheck>& registry() {
  static const std::vector<NamedCheck> checks{
      {"arith_bruteforce", check_arith_bruteforce},
      {"order_multiplicativity", check_order_multiplicativity},
      {"geom_sum_identities", check_geom_sum},
      {"kappa_is_order", check_kappa_is_order},
      {"homomorphism_law", check_homomorphism},
      {"power_closed_form", check_power_closed_form},
      {"kappa_lemmas", check_kappa_lemmas},
      {"conjugation_invariance", check_conjugation},
      {"cycle_count_three_way", check_cycle_three_way},
      {"squarefree_theorem_total", check_squarefree_theorem_total},
      {"u_part_t_independence", check_u_part_t_independence},
      {"c_v_t_class", check_c_v_t_class},
      {"c_v_squarefree_vs_general", check_c_v_squarefree_vs_general},
      {"burnside_divisibility", check_burnside_divisibility},
      {"theorem_vs_burnside", check_theorem_vs_burnside},
      {"divisor_weights", check_divisor_weights},
      {"powerset_orbits", check_powerset_orbits},
      {"orbit_stabilizer", check_orbit_stabilizer},
      {"d6p_lemmas", check_d6p_lemmas},
      {"d6p_count", check_d6p_count},
  };
  return checks;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const NamedCheck& c : registry()) names.emplace_back(c.name);
  return names;
}

Report run(const Options& options, const Formulas& formulas) {
  Report report;
  const Context ctx{options, formulas};
  for (const NamedCheck& check : registry()) {
    CheckResult result;
    result.name = check.name;
    Recorder rec(result);
    const auto start = std::chrono::steady_clock::now();
    try {
      check.fn(ctx, rec);
    } catch (const std::exception& e) {
      result.passed = false;
      if (result.detail.empty()) result.detail = std::string("exception: ") + e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(result));
  }
  return report;
}

}  // namespace cayley_census::verify
