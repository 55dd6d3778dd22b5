#include "repgrowth/character.hpp"

#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

namespace repgrowth {

RealCharacter to_real(const Character& f, double scale) {
  RealCharacter out(f.datum());
  for (const auto& [w, c] : f.terms()) out.set(w, c.convert_to<double>() * scale);
  return out;
}

std::map<Weight, BigInt, WeightLess> dominant_weight_multiplicities(const RootDatum& rd,
                                                                    const Weight& highest) {
  if (highest.size() != rd.rank()) throw ConfigError("weight rank does not match root datum");
  if (!is_dominant(rd, highest)) throw ConfigError("highest weight must be dominant");

  std::map<Weight, BigInt, WeightLess> mult;
  if (rd.rank_ss() == 0) {
    mult[highest] = 1;
    return mult;
  }

  // Weight system closure: from each weight walk down the alpha_i string
  // as far as the i-th coordinate allows.  Root-lattice offsets from the
  // highest weight ride along; they stay integral.
  using Offset = std::array<int32_t, kMaxRank>;
  std::unordered_map<Weight, Offset, WeightHash> offsets;
  std::vector<Weight> queue{highest};
  offsets.emplace(highest, Offset{});
  for (size_t head = 0; head < queue.size(); ++head) {
    const Weight w = queue[head];
    const Offset off = offsets.at(w);
    for (int i = 0; i < rd.rank_ss(); ++i) {
      Weight step = w;
      Offset o = off;
      for (int32_t k = 1; k <= w[i]; ++k) {
        step = step - rd.simple_root(i);
        o[static_cast<size_t>(i)] += 1;
        if (offsets.emplace(step, o).second) queue.push_back(step);
      }
    }
  }

  struct Entry {
    Weight w;
    Offset off;
    int64_t depth;
  };
  std::vector<Entry> dominant;
  for (const auto& [w, off] : offsets) {
    if (!is_dominant(rd, w)) continue;
    int64_t depth = 0;
    for (int i = 0; i < rd.rank_ss(); ++i) depth += off[static_cast<size_t>(i)];
    dominant.push_back({w, off, depth});
  }
  // Freudenthal references only weights strictly closer to the top, so
  // increasing depth is a valid evaluation order.
  std::sort(dominant.begin(), dominant.end(), [](const Entry& a, const Entry& b) {
    return a.depth != b.depth ? a.depth < b.depth : a.w < b.w;
  });

  const Weight two_delta = rd.delta() + rd.delta();
  for (const auto& entry : dominant) {
    if (entry.depth == 0) {
      mult[entry.w] = 1;
      continue;
    }
    BigInt num = 0;
    for (int k = 0; k < rd.u(); ++k) {
      const Weight& alpha = rd.positive_roots()[static_cast<size_t>(k)].fund;
      Weight nu = entry.w;
      for (;;) {
        nu = nu + alpha;
        auto it = mult.find(to_dominant(rd, nu).weight);
        if (it == mult.end()) break;  // left the weight system; strings are contiguous
        num += it->second * rd.inner_with_root(nu, k);
      }
    }
    // (lambda + mu + 2 delta, lambda - mu) with lambda - mu expanded in
    // simple roots; (x, alpha_j) = d_j x_j.
    const Weight sum = highest + entry.w + two_delta;
    BigInt den = 0;
    for (int j = 0; j < rd.rank_ss(); ++j)
      den += BigInt(entry.off[static_cast<size_t>(j)]) * rd.d(j) * sum[j];
    if (den <= 0) throw InvariantError("Freudenthal denominator not positive at " + entry.w.str());
    BigInt m = 2 * num / den;
    if (m * den != 2 * num)
      throw InvariantError("Freudenthal multiplicity not integral at " + entry.w.str());
    mult[entry.w] = std::move(m);
  }
  return mult;
}

Character irreducible_character(const RootDatum& rd, const Weight& highest) {
  auto mult = dominant_weight_multiplicities(rd, highest);
  Character chi(&rd);
  BigInt total = 0;
  for (const auto& [dom, m] : mult) {
    const auto orbit = weyl_orbit(rd, dom);
    for (const Weight& w : orbit) chi.set(w, m);
    total += m * static_cast<int64_t>(orbit.size());
  }
  if (total != weyl_dimension(rd, highest))
    throw InvariantError("character of " + highest.str() + " does not match the Weyl dimension");
  return chi;
}

void write_character(std::ostream& os, const Character& f) {
  for (const auto& [w, c] : f.sorted_terms()) {
    os << c.str() << " :";
    for (int i = 0; i < w.size(); ++i) os << ' ' << w[i];
    os << '\n';
  }
}

Character read_character(std::istream& is, const RootDatum* rd) {
  Character chi(rd);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto where = [&] { return " at line " + std::to_string(lineno); };
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ConfigError("character line missing ':'" + where());
    std::istringstream head(line.substr(0, colon));
    std::string tok, extra;
    if (!(head >> tok) || (head >> extra))
      throw ConfigError("expected a single coefficient before ':'" + where());
    BigInt c;
    try {
      c = BigInt(tok);
    } catch (const std::exception&) {
      throw ConfigError("bad coefficient '" + tok + "'" + where());
    }
    if (c == 0) throw ConfigError("explicit zero coefficient" + where());
    std::istringstream rest(line.substr(colon + 1));
    std::vector<int32_t> coords;
    int64_t v = 0;
    while (rest >> v) coords.push_back(static_cast<int32_t>(v));
    if (!rest.eof()) throw ConfigError("bad weight coordinate" + where());
    if (static_cast<int>(coords.size()) != rd->rank())
      throw ConfigError("expected " + std::to_string(rd->rank()) + " coordinates, got " +
                        std::to_string(coords.size()) + where());
    Weight w(coords);
    if (chi.coeff(w) != 0) throw ConfigError("duplicate weight " + w.str() + where());
    chi.set(w, std::move(c));
  }
  return chi;
}

}  // namespace repgrowth
