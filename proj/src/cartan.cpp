#include "repgrowth/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_set>

namespace repgrowth {

namespace {

[[noreturn]] void bad_factor(std::string_view token, const std::string& why) {
  throw ConfigError("invalid Cartan factor '" + std::string(token) + "': " + why);
}

CartanFactor parse_factor(std::string_view token) {
  if (token.size() < 2) bad_factor(token, "expected a family letter followed by a rank");
  char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
  static const std::string kFamilies = "ABCDEFGT";
  if (kFamilies.find(fam) == std::string::npos)
    bad_factor(token, "unknown family letter");
  int rank = 0;
  for (size_t i = 1; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i])))
      bad_factor(token, "rank must be a positive integer");
    rank = rank * 10 + (token[i] - '0');
    if (rank > 1000) bad_factor(token, "rank out of range");
  }
  if (rank < 1) bad_factor(token, "rank must be a positive integer");
  switch (fam) {
    case 'B':
    case 'C':
      if (rank == 1) return {'A', 1};  // B1 = C1 = A1
      break;
    case 'D':
      if (rank < 2) bad_factor(token, "D requires rank >= 2");
      break;
    case 'E':
      if (rank < 6 || rank > 8) bad_factor(token, "E requires rank 6, 7 or 8");
      break;
    case 'F':
      if (rank != 4) bad_factor(token, "F requires rank 4");
      break;
    case 'G':
      if (rank != 2) bad_factor(token, "G requires rank 2");
      break;
    default:
      break;
  }
  return {fam, rank};
}

// Fills the Cartan block for one simple factor at row/col offset `at`.
// C[i][j] = <alpha_j, alpha_i^vee>.
void fill_block(std::vector<std::vector<int>>& c, int at, const CartanFactor& f) {
  const int m = f.rank;
  auto set = [&](int i, int j, int v) {
    c[static_cast<size_t>(at + i)][static_cast<size_t>(at + j)] = v;
  };
  for (int i = 0; i < m; ++i) set(i, i, 2);
  auto chain = [&](int i, int j) {
    set(i, j, -1);
    set(j, i, -1);
  };
  switch (f.family) {
    case 'A':
      for (int i = 0; i + 1 < m; ++i) chain(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < m; ++i) chain(i, i + 1);
      set(m - 1, m - 2, -2);  // <alpha_{m-1}, alpha_m^vee>, last simple root short
      break;
    case 'C':
      for (int i = 0; i + 1 < m; ++i) chain(i, i + 1);
      set(m - 2, m - 1, -2);  // transpose of B
      break;
    case 'D':
      if (m == 2) break;  // A1 x A1
      for (int i = 0; i + 2 < m; ++i) chain(i, i + 1);
      chain(m - 3, m - 1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 hangs off node 4.
      chain(0, 2);
      for (int i = 2; i + 1 < m; ++i) chain(i, i + 1);
      chain(1, 3);
      break;
    case 'F':
      chain(0, 1);
      chain(2, 3);
      set(1, 2, -1);
      set(2, 1, -2);  // alpha_1, alpha_2 long
      break;
    case 'G':
      set(0, 1, -1);
      set(1, 0, -3);  // alpha_1 long, alpha_2 short
      break;
    default:
      break;
  }
}

// Symmetrizer from d_i C[i][j] = d_j C[j][i], minimal positive integers.
std::vector<int> solve_symmetrizer(const std::vector<std::vector<int>>& c) {
  const int n = static_cast<int>(c.size());
  std::vector<Rational> val(static_cast<size_t>(n), Rational(0));
  for (int start = 0; start < n; ++start) {
    if (val[static_cast<size_t>(start)] != 0) continue;
    val[static_cast<size_t>(start)] = 1;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (i == j || c[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) continue;
        // division rather than the (p, q) constructor: both entries are
        // negative here and cpp_rational rejects negative denominators
        Rational want = val[static_cast<size_t>(i)] *
                        Rational(c[static_cast<size_t>(i)][static_cast<size_t>(j)]) /
                        c[static_cast<size_t>(j)][static_cast<size_t>(i)];
        if (val[static_cast<size_t>(j)] == 0) {
          val[static_cast<size_t>(j)] = want;
          q.push(j);
        } else if (val[static_cast<size_t>(j)] != want) {
          throw InvariantError("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  BigInt lcm_den = 1;
  for (const auto& v : val) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(v));
  std::vector<BigInt> ints;
  ints.reserve(val.size());
  for (const auto& v : val) ints.push_back(numerator(v) * (lcm_den / denominator(v)));
  BigInt g = 0;
  for (const auto& v : ints) g = boost::multiprecision::gcd(g, v);
  std::vector<int> d;
  d.reserve(ints.size());
  for (const auto& v : ints) d.push_back((v / g).convert_to<int>());
  return d;
}

// Exact inverse by Gauss-Jordan elimination over the rationals.
std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& c) {
  const size_t n = c.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = c[i][j];
    a[i][n + i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InvariantError("Cartan matrix is singular");
    std::swap(a[piv], a[col]);
    Rational inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col];
      for (size_t j = col; j < 2 * n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

CartanType::CartanType(std::vector<CartanFactor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (f.family == 'T')
      rank_torus_ += f.rank;
    else
      rank_ss_ += f.rank;
  }
  if (rank() > kMaxRank)
    throw ConfigError("total rank " + std::to_string(rank()) + " exceeds supported maximum " +
                      std::to_string(kMaxRank));
  if (rank() == 0) throw ConfigError("empty Cartan type");
}

CartanType CartanType::parse(std::string_view text) {
  std::vector<CartanFactor> factors;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find_first_of("xX", pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view token = text.substr(pos, next - pos);
    if (token.empty()) throw ConfigError("invalid Cartan type '" + std::string(text) + "'");
    factors.push_back(parse_factor(token));
    if (next == text.size()) break;
    pos = next + 1;
  }
  return CartanType(std::move(factors));
}

std::string CartanType::str() const {
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += "x";
    s += f.family;
    s += std::to_string(f.rank);
  }
  return s;
}

RootDatum::RootDatum(const CartanType& type) : type_(type) {
  const int n = type_.rank_ss();
  const int r = type_.rank();
  cartan_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  int at = 0;
  for (const auto& f : type_.factors()) {
    if (f.family == 'T') continue;
    fill_block(cartan_, at, f);
    at += f.rank;
  }
  d_ = n > 0 ? solve_symmetrizer(cartan_) : std::vector<int>{};
  cartan_inv_ = n > 0 ? invert(cartan_) : std::vector<std::vector<Rational>>{};

  gram_.assign(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          Rational(d_[static_cast<size_t>(i)]) * cartan_inv_[static_cast<size_t>(i)][static_cast<size_t>(j)];

  simple_fund_.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    Weight w(r);
    for (int i = 0; i < n; ++i) w[i] = cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    simple_fund_.push_back(w);
  }

  delta_ = Weight(r);
  for (int i = 0; i < n; ++i) delta_[i] = 1;

  // Positive roots by reflection closure.  Track simple-root and
  // simple-coroot coordinates alongside the fundamental ones; both stay
  // integral under s_i.
  struct Raw {
    Weight fund;
    std::vector<int32_t> a;  // simple coords
    std::vector<int32_t> m;  // coroot coords
  };
  std::vector<Raw> found;
  std::set<std::vector<int32_t>> seen;
  for (int j = 0; j < n; ++j) {
    Raw raw{simple_fund_[static_cast<size_t>(j)], std::vector<int32_t>(static_cast<size_t>(n), 0),
            std::vector<int32_t>(static_cast<size_t>(n), 0)};
    raw.a[static_cast<size_t>(j)] = 1;
    raw.m[static_cast<size_t>(j)] = 1;
    seen.insert(raw.a);
    found.push_back(std::move(raw));
  }
  for (size_t head = 0; head < found.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      const Raw cur = found[head];
      const int32_t fi = cur.fund[i];
      if (fi == 0) continue;
      std::vector<int32_t> a = cur.a;
      a[static_cast<size_t>(i)] -= fi;
      bool positive = std::all_of(a.begin(), a.end(), [](int32_t v) { return v >= 0; });
      if (!positive || seen.count(a)) continue;
      Raw next;
      next.fund = cur.fund - fi * simple_fund_[static_cast<size_t>(i)];
      next.a = std::move(a);
      // dual reflection: m' = m - <alpha_i, beta^vee> e_i
      int32_t pair_i = 0;
      for (int j = 0; j < n; ++j)
        pair_i += cur.m[static_cast<size_t>(j)] * cartan_[static_cast<size_t>(j)][static_cast<size_t>(i)];
      next.m = cur.m;
      next.m[static_cast<size_t>(i)] -= pair_i;
      seen.insert(next.a);
      found.push_back(std::move(next));
    }
  }

  // Deterministic order: sort by simple coords.
  std::sort(found.begin(), found.end(), [](const Raw& x, const Raw& y) { return x.a < y.a; });
  roots_.reserve(found.size());
  for (auto& raw : found) {
    PositiveRoot pr;
    pr.fund = raw.fund;
    pr.simple = std::move(raw.a);
    pr.coroot = std::move(raw.m);
    // d_alpha from a_j d_j = m_j d_alpha at any nonzero coordinate.
    pr.d_alpha = 0;
    for (int j = 0; j < n; ++j) {
      if (pr.coroot[static_cast<size_t>(j)] == 0) continue;
      int num = pr.simple[static_cast<size_t>(j)] * d_[static_cast<size_t>(j)];
      if (num % pr.coroot[static_cast<size_t>(j)] != 0)
        throw InvariantError("root length is not integral");
      int cand = num / pr.coroot[static_cast<size_t>(j)];
      if (pr.d_alpha == 0)
        pr.d_alpha = cand;
      else if (pr.d_alpha != cand)
        throw InvariantError("inconsistent root length");
    }
    if (pr.d_alpha <= 0) throw InvariantError("nonpositive root length");
    roots_.push_back(std::move(pr));
  }
}

int64_t RootDatum::pair_coroot(const Weight& w, int root_index) const {
  const PositiveRoot& pr = roots_[static_cast<size_t>(root_index)];
  int64_t s = 0;
  for (int j = 0; j < rank_ss(); ++j) s += static_cast<int64_t>(pr.coroot[static_cast<size_t>(j)]) * w[j];
  return s;
}

int64_t RootDatum::inner_with_root(const Weight& w, int root_index) const {
  return pair_coroot(w, root_index) * roots_[static_cast<size_t>(root_index)].d_alpha;
}

Rational RootDatum::inner(const Weight& a, const Weight& b) const {
  Rational s(0);
  for (int i = 0; i < rank_ss(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_ss(); ++j) {
      if (b[j] == 0) continue;
      s += Rational(static_cast<int64_t>(a[i]) * b[j]) * gram_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }
  return s;
}

Rational RootDatum::height(const Weight& w) const {
  Rational s(0);
  for (int i = 0; i < rank_ss(); ++i) {
    if (w[i] == 0) continue;
    for (int j = 0; j < rank_ss(); ++j)
      s += Rational(w[i]) * cartan_inv_[static_cast<size_t>(j)][static_cast<size_t>(i)];
  }
  return s;
}

std::shared_ptr<const RootDatum> make_root_datum(const CartanType& type) {
  return std::make_shared<const RootDatum>(type);
}

Weight simple_reflection(const RootDatum& rd, int i, const Weight& w) {
  if (i < 0 || i >= rd.rank_ss()) throw ConfigError("simple reflection index out of range");
  return w - w[i] * rd.simple_root(i);
}

bool is_dominant(const RootDatum& rd, const Weight& w) {
  for (int i = 0; i < rd.rank_ss(); ++i)
    if (w[i] < 0) return false;
  return true;
}

namespace {

DominantResult to_dominant_impl(const RootDatum& rd, Weight w, std::vector<int>* word) {
  int sign = 1;
  // Each reflection at a negative coordinate strictly increases the height
  // of the semisimple part, so the walk terminates; the guard is generous.
  int64_t guard = 1000000;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rd.rank_ss(); ++i) {
      if (w[i] < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) break;
    w = w - w[neg] * rd.simple_root(neg);
    sign = -sign;
    if (word) word->push_back(neg);
    if (--guard == 0) throw InvariantError("to_dominant did not terminate");
  }
  return {w, sign};
}

}  // namespace

DominantResult to_dominant(const RootDatum& rd, const Weight& w) {
  return to_dominant_impl(rd, w, nullptr);
}

DominantResult to_dominant_strict(const RootDatum& rd, const Weight& w) {
  DominantResult res = to_dominant_impl(rd, w, nullptr);
  for (int i = 0; i < rd.rank_ss(); ++i) {
    if (res.weight[i] == 0) {
      res.sign = 0;
      break;
    }
  }
  return res;
}

std::vector<int> to_dominant_word(const RootDatum& rd, const Weight& w) {
  std::vector<int> word;
  to_dominant_impl(rd, w, &word);
  return word;
}

std::vector<Weight> weyl_orbit(const RootDatum& rd, const Weight& dominant) {
  if (!is_dominant(rd, dominant)) throw ConfigError("weyl_orbit expects a dominant weight");
  std::unordered_set<Weight, WeightHash> seen{dominant};
  std::vector<Weight> queue{dominant};
  for (size_t head = 0; head < queue.size(); ++head) {
    const Weight cur = queue[head];
    for (int i = 0; i < rd.rank_ss(); ++i) {
      if (cur[i] == 0) continue;
      Weight nxt = cur - cur[i] * rd.simple_root(i);
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  std::sort(queue.begin(), queue.end(), WeightLess{});
  return queue;
}

BigInt weyl_dimension(const RootDatum& rd, const Weight& highest) {
  if (highest.size() != rd.rank()) throw ConfigError("weight rank does not match root datum");
  if (!is_dominant(rd, highest)) throw ConfigError("weyl_dimension expects a dominant weight");
  const Weight shifted = highest + rd.delta();
  BigInt num = 1, den = 1;
  for (int k = 0; k < rd.u(); ++k) {
    num *= rd.pair_coroot(shifted, k);
    den *= rd.pair_coroot(rd.delta(), k);
  }
  BigInt q = num / den;
  if (q * den != num) throw InvariantError("Weyl dimension is not integral");
  return q;
}

}  // namespace repgrowth
