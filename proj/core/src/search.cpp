#include "frieze/search.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <thread>

#include "frieze/error.hpp"

namespace frieze {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

enum class Outcome { Accept, Reject, Overflow };

// Integer propagation of columns 1 and 2 eastward over 2n columns with early
// abort. cols[c][r] holds column 1 + c.
Outcome propagate_int(int w, const std::vector<i64>& seed, std::vector<std::vector<i64>>& cols) {
  const int n = w + 5;
  const int total = 2 * n + 2;
  cols.assign(static_cast<size_t>(total), std::vector<i64>(static_cast<size_t>(w)));
  for (int r = 0; r < w; ++r) {
    cols[0][static_cast<size_t>(r)] = seed[static_cast<size_t>(2 * r)];
    cols[1][static_cast<size_t>(r)] = seed[static_cast<size_t>(2 * r + 1)];
  }
  auto get = [&](int c, int r) -> i64 {
    if (r < 0 || r >= w) return 1;
    return cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
  };
  for (int c = 2; c < total; ++c) {
    const int x = 1 + c - 1;  // column of the centre
    for (int r = 0; r < w; ++r) {
      const i128 centre = get(c - 1, r);
      const i128 lhs = is_black_cell(r, x) ? centre * centre : centre;
      const i128 num = lhs + static_cast<i128>(get(c - 1, r - 1)) * get(c - 1, r + 1);
      const i64 left = get(c - 2, r);
      if (num % left != 0) return Outcome::Reject;
      const i128 v = num / left;
      if (v <= 0) return Outcome::Reject;
      if (v > (i128(1) << 62)) return Outcome::Overflow;
      cols[static_cast<size_t>(c)][static_cast<size_t>(r)] = static_cast<i64>(v);
    }
  }
  for (int r = 0; r < w; ++r)
    if (cols[static_cast<size_t>(2 * n)][static_cast<size_t>(r)] != cols[0][static_cast<size_t>(r)] ||
        cols[static_cast<size_t>(2 * n + 1)][static_cast<size_t>(r)] != cols[1][static_cast<size_t>(r)])
      return Outcome::Reject;
  return Outcome::Accept;
}

ZigZag seed_zigzag(int w, const std::vector<i64>& seed) {
  ZigZagShape s = straight_shape(w, 1);
  std::vector<Scalar> vals;
  for (i64 v : seed) vals.emplace_back(static_cast<long>(v));
  return make_zigzag(s, vals);
}

bool positive_integer(const FriezeGrid& g) {
  for (int r = 0; r < g.width(); ++r)
    for (int x = 0; x < g.columns(); ++x)
      if (!g.cell(r, x).is_integer() || !g.cell(r, x).is_positive()) return false;
  return true;
}

std::optional<FriezeGrid> exact_candidate(int w, const std::vector<i64>& seed) {
  try {
    FriezeGrid g = propagate_from_zigzag(seed_zigzag(w, seed), w, ScalarKind::Rational);
    if (positive_integer(g)) return g;
  } catch (const Error&) {
  }
  return std::nullopt;
}

std::optional<FriezeGrid> fast_candidate(int w, const std::vector<i64>& seed) {
  std::vector<std::vector<i64>> cols;
  switch (propagate_int(w, seed, cols)) {
    case Outcome::Reject:
      return std::nullopt;
    case Outcome::Overflow:
      return exact_candidate(w, seed);
    case Outcome::Accept:
      break;
  }
  FriezeGrid g = make_grid(w, ScalarKind::Rational);
  for (int c = 0; c < g.columns(); ++c)
    for (int r = 0; r < w; ++r)
      g.cell(r, 1 + c) = Scalar(static_cast<long>(cols[static_cast<size_t>(c)][static_cast<size_t>(r)]));
  return g;
}

std::vector<Scalar> key_of(const FriezeGrid& g) {
  std::vector<Scalar> k;
  for (int r = 0; r < g.width(); ++r)
    for (int x = 0; x < g.columns(); ++x) k.push_back(g.cell(r, x));
  return k;
}

bool key_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

FriezeGrid canonical_form(const FriezeGrid& g, bool with_mirror) {
  FriezeGrid best = g;
  std::vector<Scalar> best_key = key_of(g);
  std::vector<FriezeGrid> bases{g};
  if (with_mirror) bases.push_back(mirror(g));
  for (const auto& base : bases) {
    for (int s = 0; s < g.columns(); s += 2) {
      FriezeGrid t = translate(base, s);
      std::vector<Scalar> k = key_of(t);
      if (key_less(k, best_key)) {
        best_key = std::move(k);
        best = std::move(t);
      }
    }
  }
  return best;
}

std::vector<FriezeGrid> enumerate(const SearchConfig& cfg) {
  if (cfg.bound < 1) throw DimensionError("search bound must be positive");
  if (cfg.w < 0) throw DimensionError("negative width");
  // Width 0 has no interior rows: the single frieze is the boundary pair.
  if (cfg.w == 0) return {FriezeGrid(0, Scalar(0), Scalar(1))};
  const int m = 2 * cfg.w;
  i64 total = 1;
  for (int t = 0; t < m; ++t) total *= cfg.bound;

  auto seed_of = [&](i64 index) {
    std::vector<i64> seed(static_cast<size_t>(m));
    for (int t = m - 1; t >= 0; --t) {
      seed[static_cast<size_t>(t)] = 1 + index % cfg.bound;
      index /= cfg.bound;
    }
    return seed;
  };

  const unsigned nt = std::max(1u, cfg.threads);
  std::vector<std::vector<std::pair<i64, FriezeGrid>>> found(nt);
  auto work = [&](unsigned tid) {
    const i64 lo = total * tid / nt, hi = total * (tid + 1) / nt;
    for (i64 idx = lo; idx < hi; ++idx) {
      auto seed = seed_of(idx);
      auto g = cfg.prune ? fast_candidate(cfg.w, seed) : exact_candidate(cfg.w, seed);
      if (g) found[tid].emplace_back(idx, std::move(*g));
    }
  };
  if (nt == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  std::vector<FriezeGrid> out;
  std::map<std::vector<Scalar>, bool, decltype(&key_less)> seen(&key_less);
  for (auto& part : found) {
    for (auto& [idx, g] : part) {
      if (cfg.dedup != Dedup::None) {
        auto key = key_of(canonical_form(g, cfg.dedup == Dedup::Dihedral));
        if (!seen.emplace(std::move(key), true).second) continue;
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Orbit> dihedral_orbits(const std::vector<FriezeGrid>& friezes) {
  std::vector<Orbit> out;
  if (friezes.empty()) return out;
  const int w = friezes[0].width();
  std::map<std::vector<Scalar>, size_t, decltype(&key_less)> index(&key_less);
  for (size_t t = 0; t < friezes.size(); ++t) {
    if (friezes[t].width() != w) throw WidthMismatch("friezes of different widths");
    FriezeGrid c = canonical_form(friezes[t], true);
    auto [it, fresh] = index.emplace(key_of(c), out.size());
    if (fresh) out.push_back(Orbit{c, {}});
    out[it->second].members.push_back(t);
  }
  return out;
}

}  // namespace frieze
