#include "hrf/paths.hpp"

#include <algorithm>
#include <numeric>

namespace hrf {

std::vector<long> SimpleRootPath::root_content(std::size_t rank) const {
  std::vector<long> x(rank, 0);
  for (auto a : word) x.at(a) += 1;
  return x;
}

Weight SimpleRootPath::height(const RootSystem& rs) const {
  return rs.from_root_coordinates(root_content(rs.rank()));
}

SimpleRootPath SimpleRootPath::reversed() const {
  return SimpleRootPath{{word.rbegin(), word.rend()}};
}

SimpleRootPath SimpleRootPath::without(std::size_t i) const {
  SimpleRootPath p{word};
  p.word.erase(p.word.begin() + static_cast<std::ptrdiff_t>(i));
  return p;
}

std::string SimpleRootPath::to_string() const {
  if (word.empty()) return "()";
  std::string s = "(";
  for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "," : "") + std::to_string(word[i] + 1);
  return s + ")";
}

std::vector<SimpleRootPath> enumerate_paths(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  auto x = rs.nonnegative_root_coordinates(lambda - mu);
  if (!x) return {};
  std::vector<std::size_t> word;
  for (std::size_t i = 0; i < x->size(); ++i) word.insert(word.end(), static_cast<std::size_t>((*x)[i]), i);
  std::vector<SimpleRootPath> out;
  do {
    out.push_back(SimpleRootPath{word});
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

PathVector phi(std::size_t alpha, const PathVector& v) {
  PathVector out;
  for (const auto& [path, c] : v) {
    if (sgn(c) == 0) continue;
    SimpleRootPath p;
    p.word.reserve(path.length() + 1);
    p.word.push_back(alpha);
    p.word.insert(p.word.end(), path.word.begin(), path.word.end());
    out.emplace(std::move(p), c);
  }
  return out;
}

PathVector epsilon(const RootSystem& rs, const Weight& lambda, std::size_t alpha, const PathVector& v) {
  PathVector out;
  for (const auto& [path, c] : v) {
    // Walk from the end so that the suffix sum g_{i+1} + ... + g_l is available.
    long pairing = rs.pairing(lambda, alpha);
    for (std::size_t k = path.length(); k-- > 0;) {
      const std::size_t g = path.word[k];
      if (g == alpha) {
        Rational term = c * pairing;
        if (sgn(term) != 0) out[path.without(k)] += term;
      }
      pairing -= rs.cartan_entry(alpha, g);
    }
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

namespace {

std::string encode(const SimpleRootPath& p) {
  std::string s;
  s.reserve(p.length());
  for (auto a : p.word) s.push_back(static_cast<char>(a));
  return s;
}

}  // namespace

PathGram::PathGram(RootSystem rs, Weight lambda) : rs_(std::move(rs)), lambda_(std::move(lambda)) {}

Integer PathGram::entry(const SimpleRootPath& a, const SimpleRootPath& b) {
  if (a.root_content(rs_.rank()) != b.root_content(rs_.rank())) return 0;
  return recurse(encode(a), encode(b));
}

Integer PathGram::recurse(const std::string& a, const std::string& b) {
  if (b.empty()) return 1;
  std::string key;
  key.reserve(a.size() + b.size() + 1);
  key.append(a).push_back('\xff');
  key.append(b);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const auto b1 = static_cast<std::size_t>(static_cast<unsigned char>(b[0]));
  // <mu, b1^vee> with mu = lambda - ht(b) + b1 (the weight of phi_{b^{(1)}}(empty)).
  long coeff = rs_.pairing(lambda_, b1);
  for (std::size_t k = 1; k < b.size(); ++k) coeff -= rs_.cartan_entry(b1, static_cast<unsigned char>(b[k]));
  const std::string tail = b.substr(1);
  Integer total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto ai = static_cast<std::size_t>(static_cast<unsigned char>(a[i]));
    if (ai == b1 && coeff != 0) {
      std::string rest = a;
      rest.erase(i, 1);
      total += Integer(coeff) * recurse(rest, tail);
    }
    coeff += rs_.cartan_entry(b1, ai);
  }
  memo_.emplace(std::move(key), total);
  return total;
}

Matrix PathGram::block(const std::vector<SimpleRootPath>& basis) {
  const std::size_t n = basis.size();
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational v(entry(basis[i], basis[j]));
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

Matrix PathGram::block(const Weight& mu) { return block(enumerate_paths(rs_, lambda_, mu)); }

Rational gram_entry(const RootSystem& rs, const Weight& lambda, const SimpleRootPath& a, const SimpleRootPath& b) {
  PathGram g(rs, lambda);
  return Rational(g.entry(a, b));
}

Matrix gram_block(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  PathGram g(rs, lambda);
  return g.block(mu);
}

long default_depth(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda)) {
    throw std::invalid_argument("no default depth for non-dominant weight " + lambda.to_string());
  }
  Rational h = rs.height(lambda - rs.antidominant_conjugate(lambda));
  return h.get_num().get_si();
}

namespace {

/// All x in N^rank with |x| = total, in lexicographic order.
void compositions(std::size_t rank, long total, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (cur.size() + 1 == rank) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (long k = 0; k <= total; ++k) {
    cur.push_back(k);
    compositions(rank, total - k, cur, out);
    cur.pop_back();
  }
}

struct LevelData {
  std::vector<SimpleRootPath> paths;
  std::map<SimpleRootPath, std::size_t> index;
  std::vector<std::size_t> reps;  // pivot positions into paths
  Matrix gram;                    // full Gram on paths, reduced into the ring
  Matrix gram_reps_inverse;
};

}  // namespace

StandardModule standard_module(const RootSystem& rs, const Ring& ring, const Weight& lambda,
                               std::optional<long> depth) {
  if (ring.characteristic() == 2) throw CharacteristicTwoError();
  if (lambda.rank() != rs.rank()) throw std::invalid_argument("weight rank mismatch");
  const bool auto_depth = !depth.has_value();
  if (auto_depth) {
    if (ring.characteristic() != 0) {
      throw std::invalid_argument("an explicit depth is required in positive characteristic");
    }
    depth = default_depth(rs, lambda);
  }
  if (*depth < 0) throw std::invalid_argument("depth must be nonnegative");

  PathGram pg(rs, lambda);
  std::map<Weight, LevelData> levels;
  Dimensions dims;
  std::vector<BlockMap> lowering(rs.rank());
  BlockForm form;
  std::map<Weight, std::vector<SimpleRootPath>> reps_out;
  bool last_level_nonzero = false;
  long explored = 0;

  for (long h = 0; h <= *depth; ++h) {
    std::vector<std::vector<long>> xs;
    std::vector<long> cur;
    compositions(rs.rank(), h, cur, xs);
    bool any = false;
    std::map<Weight, LevelData> current;
    for (const auto& x : xs) {
      const Weight mu = lambda - rs.from_root_coordinates(x);
      LevelData data;
      data.paths = enumerate_paths(rs, lambda, mu);
      for (std::size_t i = 0; i < data.paths.size(); ++i) data.index.emplace(data.paths[i], i);
      data.gram = pg.block(data.paths).normalized(ring);
      data.reps = independent_columns(data.gram, ring);
      if (data.reps.empty()) continue;
      any = true;
      Matrix g_rr = data.gram.select_rows(data.reps).select_columns(data.reps);
      data.gram_reps_inverse = inverse(g_rr, ring);
      dims.emplace(mu, data.reps.size());
      form.gram.emplace(mu, g_rr);
      auto& reps = reps_out[mu];
      for (auto r : data.reps) reps.push_back(data.paths[r]);

      // F_alpha from nu = mu + alpha: the class of (alpha, b) for each representative b of nu,
      // expressed through the Gram pairing against the representatives of mu.
      for (std::size_t a = 0; a < rs.rank(); ++a) {
        const Weight nu = mu + rs.simple_root(a);
        auto up = levels.find(nu);
        if (up == levels.end()) continue;
        const LevelData& src = up->second;
        Matrix pair(data.reps.size(), src.reps.size());
        for (std::size_t c = 0; c < src.reps.size(); ++c) {
          SimpleRootPath image;
          image.word.push_back(a);
          const auto& b = src.paths[src.reps[c]].word;
          image.word.insert(image.word.end(), b.begin(), b.end());
          const std::size_t col = data.index.at(image);
          for (std::size_t r = 0; r < data.reps.size(); ++r) pair(r, c) = data.gram(data.reps[r], col);
        }
        lowering[a].emplace(nu, multiply(data.gram_reps_inverse, pair, ring));
      }
      current.emplace(mu, std::move(data));
    }
    explored = h;
    last_level_nonzero = any;
    if (!any) break;
    // Only the previous level feeds the next one.
    levels = std::move(current);
  }

  StandardModule out{GradedModule(rs, ring, std::move(dims), std::move(lowering)), std::move(form),
                     std::move(reps_out), lambda, *depth, false};
  out.truncated = !auto_depth && last_level_nonzero && explored == *depth;
  return out;
}

}  // namespace hrf
