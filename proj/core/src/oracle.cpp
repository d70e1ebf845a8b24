#include "hrf/oracle.hpp"

#include <algorithm>
#include <functional>

namespace hrf::oracle {

Integer weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("weyl_dim: " + lambda.to_string() + " is not dominant");
  // Positive coroots are the positive roots of the transposed Cartan matrix.
  std::vector<std::vector<long>> dual(rs.rank(), std::vector<long>(rs.rank()));
  for (std::size_t i = 0; i < rs.rank(); ++i)
    for (std::size_t j = 0; j < rs.rank(); ++j) dual[i][j] = rs.cartan_entry(j, i);
  Rational prod = 1;
  for (const auto& c : enumerate_positive_roots(dual)) {
    long num = 0;
    long den = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      num += c[i] * (lambda[i] + 1);
      den += c[i];
    }
    Rational ratio(num, den);
    ratio.canonicalize();
    prod *= ratio;
  }
  prod.canonicalize();
  return prod.get_num();
}

CharacterTable freudenthal_character(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda)) {
    throw std::invalid_argument("freudenthal_character: " + lambda.to_string() + " is not dominant");
  }
  std::vector<Weight> roots;
  for (const auto& x : rs.positive_roots()) roots.push_back(rs.from_root_coordinates(x));
  const Weight rho = rs.rho();
  const Rational top = rs.inner_product(lambda + rho, lambda + rho);

  CharacterTable mult{{lambda, 1}};
  std::vector<Weight> level{lambda};
  while (!level.empty()) {
    std::vector<Weight> candidates;
    for (const auto& mu : level)
      for (std::size_t i = 0; i < rs.rank(); ++i) candidates.push_back(mu - rs.simple_root(i));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<Weight> next;
    for (const auto& mu : candidates) {
      const Rational denom = top - rs.inner_product(mu + rho, mu + rho);
      if (sgn(denom) == 0) continue;  // only lambda itself attains the top norm
      Rational sum = 0;
      for (const auto& g : roots) {
        Weight w = mu + g;
        for (long k = 1;; ++k, w = w + g) {
          auto it = mult.find(w);
          if (it == mult.end()) {
            // Weights above the current level that are absent have multiplicity 0;
            // the alpha-string through a weight is unbroken, so we can stop.
            if (!rs.leq(w, lambda)) break;
            continue;
          }
          sum += rs.inner_product(w, g) * it->second;
        }
      }
      Rational m = 2 * sum / denom;
      if (m.get_den() != 1) throw std::logic_error("Freudenthal recursion produced a non-integer");
      if (sgn(m) > 0) {
        mult.emplace(mu, m.get_num().get_si());
        next.push_back(mu);
      }
    }
    level = std::move(next);
  }
  return mult;
}

Integer sl2_gram(long n, long l) {
  if (l < 0) throw std::invalid_argument("sl2_gram: negative length");
  Integer r = factorial(static_cast<unsigned long>(l));
  for (long k = 0; k < l; ++k) r *= (n - k);
  return r;
}

namespace {

// ---- small exact helpers over F_p, independent of the library's matrix code ----

long mod_p(const Rational& x, unsigned long p) {
  Integer q(p);
  Integer den = x.get_den() % q;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), q.get_mpz_t());
  Integer r = (x.get_num() * inv) % q;
  if (sgn(r) < 0) r += q;
  return r.get_si();
}

using Vec = std::vector<long>;

/// All subspaces of F_p^d as reduced row-echelon row lists, smallest dimension first.
std::vector<std::vector<Vec>> subspaces(std::size_t d, long p) {
  std::vector<std::vector<Vec>> out;
  for (std::size_t k = 0; k <= d; ++k) {
    // choose pivot columns
    std::vector<std::size_t> piv;
    std::function<void(std::size_t)> choose = [&](std::size_t start) {
      if (piv.size() == k) {
        // free entries: positions (row r, col c) with c > piv[r], c not a pivot
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = piv[r] + 1; c < d; ++c)
            if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
        std::vector<long> vals(free.size(), 0);
        while (true) {
          std::vector<Vec> rows(k, Vec(d, 0));
          for (std::size_t r = 0; r < k; ++r) rows[r][piv[r]] = 1;
          for (std::size_t i = 0; i < free.size(); ++i) rows[free[i].first][free[i].second] = vals[i];
          out.push_back(rows);
          std::size_t i = 0;
          while (i < vals.size() && ++vals[i] == p) vals[i++] = 0;
          if (i == vals.size()) break;
        }
        return;
      }
      for (std::size_t c = start; c < d; ++c) {
        piv.push_back(c);
        choose(c + 1);
        piv.pop_back();
      }
    };
    choose(0);
  }
  return out;
}

/// Membership of a residue vector in an RREF row space over F_p.
bool in_row_space(Vec v, const std::vector<Vec>& rows, long p) {
  for (const auto& r : rows) {
    std::size_t piv = 0;
    while (r[piv] == 0) ++piv;
    long c = v[piv];
    if (c == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = ((v[j] - c * r[j]) % p + p) % p;
  }
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

/// Ambient: L(p) + L(p-2) for sl2 in divided-power bases v_i = f^{(i)} v.
struct Ambient {
  unsigned long p;
  std::vector<long> highest;  // {p, p-2}
  /// Coordinates at weight mu: components (summand s, index i) with mu = n_s - 2 i.
  std::map<long, std::vector<std::pair<std::size_t, long>>> slots;

  explicit Ambient(unsigned long prime) : p(prime), highest{static_cast<long>(prime), static_cast<long>(prime) - 2} {
    for (std::size_t s = 0; s < highest.size(); ++s)
      for (long i = 0; i <= highest[s]; ++i) slots[highest[s] - 2 * i].emplace_back(s, i);
  }

  std::size_t dim(long mu) const {
    auto it = slots.find(mu);
    return it == slots.end() ? 0 : it->second.size();
  }

  /// f^{(k)} v_i = C(i+k, k) v_{i+k};  e^{(k)} v_i = C(n-i+k, k) v_{i-k}.
  std::vector<Rational> divided(long mu, const std::vector<Rational>& x, long k, bool raising) const {
    const long target = raising ? mu + 2 * k : mu - 2 * k;
    std::vector<Rational> y(dim(target));
    if (y.empty()) return y;
    const auto& src = slots.at(mu);
    const auto& dst = slots.at(target);
    for (std::size_t a = 0; a < src.size(); ++a) {
      const auto [s, i] = src[a];
      const long j = raising ? i - k : i + k;
      if (j < 0 || j > highest[s]) continue;
      const Integer c = raising ? binomial(highest[s] - i + k, k) : binomial(i + k, k);
      for (std::size_t b = 0; b < dst.size(); ++b)
        if (dst[b] == std::make_pair(s, j)) y[b] += Rational(c) * x[a];
    }
    return y;
  }

  Rational form(long mu, std::size_t a, std::size_t b, const Rational& scale) const {
    if (a != b) return 0;
    const auto [s, i] = slots.at(mu)[a];
    Rational g(binomial(highest[s], static_cast<unsigned long>(i)));
    return s == 0 ? g : g * scale;
  }
};

/// Basis of M_mu = standard lattice + (1/p) lift(W_mu): the rows of W over p,
/// then the standard vectors off W's pivots.
std::vector<std::vector<Rational>> candidate_basis(std::size_t d, const std::vector<Vec>& w, long p) {
  std::vector<std::vector<Rational>> basis;
  std::vector<bool> pivot(d, false);
  for (const auto& r : w) {
    std::size_t piv = 0;
    while (r[piv] == 0) ++piv;
    pivot[piv] = true;
    std::vector<Rational> v(d);
    for (std::size_t j = 0; j < d; ++j) {
      v[j] = Rational(r[j], p);
      v[j].canonicalize();
    }
    basis.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (pivot[j]) continue;
    std::vector<Rational> v(d);
    v[j] = 1;
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_p_integral(const Rational& x, unsigned long p) { return valuation(Integer(x.get_den()), p) == 0; }

bool member(const std::vector<Rational>& x, const std::vector<Vec>& w, unsigned long p) {
  Vec residue(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    Rational px = x[j] * static_cast<long>(p);
    if (!is_p_integral(px, p)) return false;
    residue[j] = mod_p(px, p);
  }
  return in_row_space(residue, w, static_cast<long>(p));
}

/// Determinant of a small rational matrix by cofactor-free elimination.
Rational det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && sgn(a[r][c]) == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      std::swap(a[r], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t k = c + 1; k < n; ++k) {
      Rational f = a[k][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[k][j] -= f * a[c][j];
    }
  }
  return d;
}

}  // namespace

std::optional<TiltingFixture> sl2_tilting_fixture(unsigned long p, std::optional<long> max_index_exponent) {
  if (p == 2) throw CharacteristicTwoError();
  if (!is_prime(p)) throw std::invalid_argument("sl2_tilting_fixture: p must be prime");
  const Ambient amb(p);
  const long bound = max_index_exponent.value_or(static_cast<long>(p) - 1);
  const long lp = static_cast<long>(p);

  std::vector<long> weights;  // descending
  for (auto it = amb.slots.rbegin(); it != amb.slots.rend(); ++it) weights.push_back(it->first);
  std::map<std::size_t, std::vector<std::vector<Vec>>> subspace_cache;
  for (long mu : weights) {
    const std::size_t d = amb.dim(mu);
    if (!subspace_cache.contains(d)) subspace_cache.emplace(d, subspaces(d, lp));
  }

  const std::vector<Rational> scales{Rational(1), Rational(-1), Rational(lp), Rational(-lp)};
  std::size_t examined = 0;
  for (const auto& scale : scales) {
    // Per weight, the glue choices whose Gram is p-integral with unit determinant.
    std::vector<std::vector<const std::vector<Vec>*>> options(weights.size());
    for (std::size_t wi = 0; wi < weights.size(); ++wi) {
      const long mu = weights[wi];
      const std::size_t d = amb.dim(mu);
      for (const auto& w : subspace_cache.at(d)) {
        auto b = candidate_basis(d, w, lp);
        std::vector<std::vector<Rational>> g(d, std::vector<Rational>(d));
        bool integral = true;
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < d; ++k) s += b[i][k] * amb.form(mu, k, k, scale) * b[j][k];
            g[i][j] = s;
            integral = integral && is_p_integral(s, p);
          }
        Rational dt = det(g);
        if (integral && sgn(dt) != 0 && valuation(dt, p) == 0) options[wi].push_back(&w);
      }
    }
    if (std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); })) continue;

    std::vector<std::size_t> choice(weights.size(), 0);
    while (true) {
      long index = 0;
      for (std::size_t wi = 0; wi < weights.size(); ++wi) index += static_cast<long>(options[wi][choice[wi]]->size());
      if (index <= bound) {
        ++examined;
        bool closed = true;
        for (std::size_t wi = 0; wi < weights.size() && closed; ++wi) {
          const long mu = weights[wi];
          const auto basis = candidate_basis(amb.dim(mu), *options[wi][choice[wi]], lp);
          for (const auto& x : basis) {
            for (long k = 1; k <= lp && closed; ++k) {
              for (bool raising : {false, true}) {
                const long target = raising ? mu + 2 * k : mu - 2 * k;
                if (amb.dim(target) == 0) continue;
                auto y = amb.divided(mu, x, k, raising);
                auto pos = std::find(weights.begin(), weights.end(), target) - weights.begin();
                if (!member(y, *options[pos][choice[pos]], p)) {
                  closed = false;
                  break;
                }
              }
            }
          }
        }
        if (closed) {
          // Assemble the lattice module in the ambient divided-power coordinates.
          const RootSystem rs = RootSystem::A1();
          Dimensions dims;
          std::vector<BlockMap> lowering(1);
          BlockForm form;
          std::map<Weight, Matrix> basis;
          for (std::size_t wi = 0; wi < weights.size(); ++wi) {
            const long mu = weights[wi];
            const std::size_t d = amb.dim(mu);
            dims.emplace(Weight{mu}, d);
            Matrix g(d, d);
            for (std::size_t k = 0; k < d; ++k) g(k, k) = amb.form(mu, k, k, scale);
            form.gram.emplace(Weight{mu}, g);
            basis.emplace(Weight{mu}, Matrix::from_columns(candidate_basis(d, *options[wi][choice[wi]], lp), d));
            if (amb.dim(mu - 2) > 0) {
              Matrix f(amb.dim(mu - 2), d);
              for (std::size_t k = 0; k < d; ++k) {
                std::vector<Rational> e(d);
                e[k] = 1;
                f.set_column(k, amb.divided(mu, e, 1, false));
              }
              lowering[0].emplace(Weight{mu}, f);
            }
          }
          GradedModule ambient(rs, Ring::rationals(), std::move(dims), std::move(lowering));
          return TiltingFixture{LatticeModule{std::move(ambient), std::move(basis), p}, std::move(form), scale, index,
                                examined};
        }
      }
      std::size_t i = 0;
      while (i < choice.size() && ++choice[i] == options[i].size()) choice[i++] = 0;
      if (i == choice.size()) break;
    }
  }
  return std::nullopt;
}

}  // namespace hrf::oracle
