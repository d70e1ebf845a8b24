#include "hrf/roots.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace hrf {

Weight Weight::operator+(const Weight& o) const {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  Weight r(*this);
  for (std::size_t i = 0; i < rank(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  Weight r(*this);
  for (std::size_t i = 0; i < rank(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

Weight Weight::operator-() const {
  Weight r(*this);
  for (auto& c : r.coords) c = -c;
  return r;
}

Weight Weight::operator*(long k) const {
  Weight r(*this);
  for (auto& c : r.coords) c *= k;
  return r;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ')';
  return os.str();
}

namespace {

constexpr std::size_t kMaxPositiveRoots = 4096;

std::vector<std::vector<long>> cartan_of_type(char family, int n) {
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  switch (family) {
    case 'A':
      break;
    case 'B':  // alpha_n short
      if (n < 2) throw RootSystemError("B_n needs n >= 2");
      a[n - 1][n - 2] = -2;
      break;
    case 'C':  // alpha_n long
      if (n < 2) throw RootSystemError("C_n needs n >= 2");
      a[n - 2][n - 1] = -2;
      break;
    case 'D':
      if (n < 4) throw RootSystemError("D_n needs n >= 4");
      a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      break;
    case 'G':
      if (n != 2) throw RootSystemError("only G2 exists");
      a[0][1] = -1;
      a[1][0] = -3;
      break;
    default:
      throw RootSystemError(std::string("unknown root system family '") + family + "'");
  }
  return a;
}

}  // namespace

std::vector<std::vector<long>> enumerate_positive_roots(const std::vector<std::vector<long>>& cartan) {
  const std::size_t n = cartan.size();
  std::set<std::vector<long>> all;
  std::vector<std::vector<long>> level;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> x(n, 0);
    x[i] = 1;
    level.push_back(x);
    all.insert(x);
  }
  std::vector<std::vector<long>> out;
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
    std::set<std::vector<long>> next;
    for (const auto& beta : level) {
      for (std::size_t i = 0; i < n; ++i) {
        // p = length of the alpha_i-string below beta; q = p - <beta, alpha_i^vee>.
        long p = 0;
        std::vector<long> down = beta;
        while (true) {
          down[i] -= 1;
          if (!all.contains(down)) break;
          ++p;
        }
        long pair = 0;
        for (std::size_t j = 0; j < n; ++j) pair += cartan[i][j] * beta[j];
        if (p - pair > 0) {
          std::vector<long> up = beta;
          up[i] += 1;
          if (!all.contains(up)) next.insert(up);
        }
      }
    }
    for (const auto& r : next) all.insert(r);
    if (all.size() > kMaxPositiveRoots) throw RootSystemError("Cartan matrix is not of finite type");
    level.assign(next.begin(), next.end());
  }
  return out;
}

RootSystem::RootSystem(std::vector<std::vector<long>> cartan, std::string label)
    : cartan_(std::move(cartan)), label_(std::move(label)) {
  const std::size_t n = cartan_.size();
  if (n == 0) throw RootSystemError("rank must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan_[i].size() != n) throw RootSystemError("Cartan matrix must be square");
    if (cartan_[i][i] != 2) throw RootSystemError("Cartan diagonal entries must equal 2");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan_[i][j] > 0) throw RootSystemError("off-diagonal Cartan entries must be <= 0");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw RootSystemError("Cartan zero pattern must be symmetric");
    }
  }
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = cartan_[i][j];
  const Ring q = Ring::rationals();
  try {
    cartan_inverse_ = inverse(a, q);
  } catch (const ArithmeticError&) {
    throw RootSystemError("Cartan matrix is singular");
  }
  for (std::size_t j = 0; j < n; ++j) {
    Weight w{std::vector<long>(n)};
    for (std::size_t i = 0; i < n; ++i) w.coords[i] = cartan_[i][j];
    simple_roots_.push_back(std::move(w));
  }

  // Symmetrizer: d_i A[i][j] = d_j A[j][i], propagated along the Dynkin graph.
  symmetrizer_.assign(n, Rational(0));
  for (std::size_t start = 0; start < n; ++start) {
    if (sgn(symmetrizer_[start]) != 0) continue;
    std::vector<std::size_t> component{start};
    symmetrizer_[start] = 1;
    std::queue<std::size_t> todo;
    todo.push(start);
    while (!todo.empty()) {
      std::size_t i = todo.front();
      todo.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || cartan_[i][j] == 0) continue;
        Rational dj = symmetrizer_[i] * Rational(cartan_[i][j]) / Rational(cartan_[j][i]);
        if (sgn(symmetrizer_[j]) == 0) {
          symmetrizer_[j] = dj;
          component.push_back(j);
          todo.push(j);
        } else if (symmetrizer_[j] != dj) {
          throw RootSystemError("Cartan matrix is not symmetrizable");
        }
      }
    }
    Rational smallest = symmetrizer_[start];
    for (auto i : component) smallest = std::min(smallest, symmetrizer_[i]);
    for (auto i : component) symmetrizer_[i] /= smallest;
  }
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = symmetrizer_[i];
  weight_gram_ = d * cartan_inverse_;

  positive_roots_ = enumerate_positive_roots(cartan_);
  if (label_.empty()) label_ = "custom";
}

RootSystem RootSystem::from_type(const std::string& label) {
  auto x = label.find('x');
  if (x != std::string::npos) {
    return product(from_type(label.substr(0, x)), from_type(label.substr(x + 1)));
  }
  if (label.size() < 2) throw RootSystemError("bad root system label '" + label + "'");
  int n = 0;
  try {
    n = std::stoi(label.substr(1));
  } catch (const std::exception&) {
    throw RootSystemError("bad root system label '" + label + "'");
  }
  if (n < 1 || n > 8) throw RootSystemError("rank out of supported range in '" + label + "'");
  return RootSystem(cartan_of_type(label[0], n), label);
}

RootSystem RootSystem::product(const RootSystem& a, const RootSystem& b) {
  const std::size_t n = a.rank() + b.rank();
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) c[i][j] = a.cartan_[i][j];
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) c[a.rank() + i][a.rank() + j] = b.cartan_[i][j];
  return RootSystem(std::move(c), a.label_ + "x" + b.label_);
}

long RootSystem::pairing(const Weight& mu, std::size_t i) const {
  if (i >= rank()) throw std::out_of_range("simple root index " + std::to_string(i) + " out of range");
  if (mu.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  return mu.coords[i];
}

std::vector<Rational> RootSystem::root_coordinates(const Weight& mu) const {
  if (mu.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  std::vector<Rational> v(mu.coords.begin(), mu.coords.end());
  return cartan_inverse_ * std::span<const Rational>(v);
}

std::optional<std::vector<long>> RootSystem::nonnegative_root_coordinates(const Weight& mu) const {
  auto x = root_coordinates(mu);
  std::vector<long> out;
  out.reserve(x.size());
  for (const auto& c : x) {
    if (c.get_den() != 1 || sgn(c) < 0) return std::nullopt;
    out.push_back(c.get_num().get_si());
  }
  return out;
}

Weight RootSystem::from_root_coordinates(const std::vector<long>& x) const {
  Weight w = zero();
  for (std::size_t j = 0; j < rank(); ++j)
    for (std::size_t i = 0; i < rank(); ++i) w.coords[i] += cartan_[i][j] * x[j];
  return w;
}

Rational RootSystem::height(const Weight& mu) const {
  Rational h = 0;
  for (const auto& c : root_coordinates(mu)) h += c;
  return h;
}

bool RootSystem::leq(const Weight& lambda, const Weight& mu) const {
  return nonnegative_root_coordinates(mu - lambda).has_value();
}

bool RootSystem::is_dominant(const Weight& mu) const {
  return std::all_of(mu.coords.begin(), mu.coords.end(), [](long c) { return c >= 0; });
}

Weight RootSystem::reflect(const Weight& mu, std::size_t i) const {
  return mu - simple_root(i) * pairing(mu, i);
}

Weight RootSystem::antidominant_conjugate(const Weight& mu) const {
  Weight w = mu;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (w.coords[i] > 0) {
        w = reflect(w, i);
        changed = true;
      }
    }
  }
  return w;
}

Rational RootSystem::inner_product(const Weight& mu, const Weight& nu) const {
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      if (mu.coords[i] != 0 && nu.coords[j] != 0) s += weight_gram_(i, j) * mu.coords[i] * nu.coords[j];
  return s;
}

bool UpSet::contains(const RootSystem& rs, const Weight& mu) const {
  return std::any_of(generators.begin(), generators.end(),
                     [&](const Weight& g) { return rs.leq(g, mu); });
}

std::string UpSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? ", " : "") + generators[i].to_string();
  return s + "}";
}

}  // namespace hrf
