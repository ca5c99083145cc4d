#include "simplegames/certificates.hpp"

#include <algorithm>
#include <array>

#include "simplegames/errors.hpp"

namespace simplegames {

namespace {

std::string join(const std::vector<Coalition>& cs) {
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? "," : "") + cs[i].to_string();
  return s;
}

std::array<int, 64> multiplicities(const std::vector<Coalition>& cs) {
  std::array<int, 64> counts{};
  for (Coalition c : cs)
    for (int p : c.members()) ++counts[static_cast<std::size_t>(p)];
  return counts;
}

// Sum vectors of t coalitions encoded in base `radix` (digit per player). Any
// sum of at most radix-1 coalitions fits without carries, so adding a
// coalition is adding its precomputed offset.
class SumLattice {
public:
  SumLattice(int n, std::size_t radix) : n_(n), radix_(radix) {
    size_ = 1;
    for (int i = 0; i < n; ++i) size_ *= radix;
  }

  static bool fits(int n, std::size_t radix, std::size_t cap) {
    std::size_t s = 1;
    for (int i = 0; i < n; ++i) {
      s *= radix;
      if (s > cap) return false;
    }
    return true;
  }

  std::size_t offset(Coalition c) const {
    std::size_t off = 0, place = 1;
    for (int i = 0; i < n_; ++i, place *= radix_)
      if (c.contains(i)) off += place;
    return off;
  }
  // digits of `state` dominate those of coalition c
  bool contains(std::size_t state, Coalition c) const {
    for (int i = 0; i < n_; ++i, state /= radix_)
      if (c.contains(i) && state % radix_ == 0) return false;
    return true;
  }
  std::size_t size() const { return size_; }

private:
  int n_;
  std::size_t radix_;
  std::size_t size_;
};

using Layer = std::vector<std::uint64_t>;

Layer next_layer(const Layer& prev, const std::vector<std::size_t>& offsets, std::size_t bits) {
  Layer out(prev.size(), 0);
  for (std::size_t off : offsets) {
    const std::size_t word_shift = off / 64, bit_shift = off % 64;
    for (std::size_t w = prev.size(); w-- > word_shift;) {
      std::uint64_t v = prev[w - word_shift] << bit_shift;
      if (bit_shift != 0 && w - word_shift >= 1) v |= prev[w - word_shift - 1] >> (64 - bit_shift);
      out[w] |= v;
    }
  }
  if (bits % 64 != 0) out.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
  return out;
}

bool test_bit(const Layer& l, std::size_t i) { return (l[i / 64] >> (i % 64)) & 1U; }

// Walks back through the layers to recover one coalition sequence.
std::vector<Coalition> unwind(const std::vector<Layer>& layers, std::size_t state, const std::vector<Coalition>& family,
                              const std::vector<std::size_t>& offsets, const SumLattice& lattice) {
  std::vector<Coalition> out;
  for (std::size_t t = layers.size() - 1; t > 0; --t) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!lattice.contains(state, family[i])) continue;
      if (!test_bit(layers[t - 1], state - offsets[i])) continue;
      out.push_back(family[i]);
      state -= offsets[i];
      break;
    }
  }
  return out;
}

std::vector<Coalition> all_losing(const SimpleGame& g) {
  // Downward closure of the maximal losing coalitions.
  std::vector<Coalition> out;
  for (Coalition l : maximal_losing(g)) {
    const std::uint64_t bits = l.bits();
    for (std::uint64_t s = bits;; s = (s - 1) & bits) {
      out.emplace_back(s);
      if (s == 0) break;
    }
  }
  canonicalize(out);
  return out;
}

// Certificate search by dynamic programming over per-player multiplicity
// vectors. Pre-coalitions may be taken minimal winning: shrinking a winner and
// dropping the same players from the losing side keeps a certificate valid.
std::optional<TradingTransform> lattice_search(const SimpleGame& g, std::size_t len, const std::vector<Coalition>& losing) {
  const int n = g.player_count();
  const SumLattice lattice(n, len + 1);
  const auto& winning = g.min_winning();
  std::vector<std::size_t> win_off, lose_off;
  for (Coalition c : winning) win_off.push_back(lattice.offset(c));
  for (Coalition c : losing) lose_off.push_back(lattice.offset(c));
  const std::size_t words = (lattice.size() + 63) / 64;
  std::vector<Layer> win_layers{Layer(words, 0)}, lose_layers{Layer(words, 0)};
  win_layers[0][0] = lose_layers[0][0] = 1;
  for (std::size_t t = 1; t <= len; ++t) {
    win_layers.push_back(next_layer(win_layers.back(), win_off, lattice.size()));
    lose_layers.push_back(next_layer(lose_layers.back(), lose_off, lattice.size()));
  }
  const Layer& wl = win_layers.back();
  const Layer& ll = lose_layers.back();
  for (std::size_t w = 0; w < words; ++w) {
    const std::uint64_t both = wl[w] & ll[w];
    if (both == 0) continue;
    const std::size_t state = w * 64 + static_cast<std::size_t>(std::countr_zero(both));
    TradingTransform tt{unwind(win_layers, state, winning, win_off, lattice),
                        unwind(lose_layers, state, losing, lose_off, lattice)};
    return tt;
  }
  return std::nullopt;
}

// Fallback for large n: multisets of minimal winning coalitions, then split
// the multiplicity vector into `len` losing coalitions.
class SplitSearch {
public:
  SplitSearch(const SimpleGame& g, std::size_t len) : g_(g), len_(len) {}

  std::optional<TradingTransform> run() {
    const auto& w = g_.min_winning();
    std::vector<std::size_t> pick;
    return choose(w, 0, pick);
  }

private:
  std::optional<TradingTransform> choose(const std::vector<Coalition>& w, std::size_t from, std::vector<std::size_t>& pick) {
    if (pick.size() == len_) {
      std::vector<Coalition> pre;
      for (std::size_t i : pick) pre.push_back(w[i]);
      const auto counts = multiplicities(pre);
      players_.clear();
      for (int p = 0; p < g_.player_count(); ++p)
        if (counts[static_cast<std::size_t>(p)] > 0) players_.push_back(p);
      counts_ = counts;
      parts_.assign(len_, Coalition{});
      if (split(0)) return TradingTransform{pre, parts_};
      return std::nullopt;
    }
    if (++budget_ > kBudget) {
      exhausted_ = true;
      return std::nullopt;
    }
    for (std::size_t i = from; i < w.size(); ++i) {
      pick.push_back(i);
      auto found = choose(w, i, pick);
      pick.pop_back();
      if (found || exhausted_) return found;
    }
    return std::nullopt;
  }

public:
  /// The budget ran out, so a nullopt result proves nothing.
  bool exhausted() const { return exhausted_; }

private:
  // Assign each player's occurrences to distinct parts; parts must stay losing.
  bool split(std::size_t idx) {
    if (idx == players_.size()) return true;
    const int p = players_[idx];
    return place(p, counts_[static_cast<std::size_t>(p)], 0, idx);
  }
  bool place(int p, int remaining, std::size_t start, std::size_t idx) {
    if (remaining == 0) return split(idx + 1);
    for (std::size_t part = start; part + static_cast<std::size_t>(remaining) <= len_; ++part) {
      // identical parts are interchangeable: only fill the first of equal ones
      if (part > start && parts_[part] == parts_[part - 1] && !parts_[part - 1].contains(p)) continue;
      const Coalition before = parts_[part];
      parts_[part] = before.with(p);
      if (!g_.is_winning(parts_[part]) && place(p, remaining - 1, part + 1, idx)) return true;
      parts_[part] = before;
    }
    return false;
  }

  static constexpr std::size_t kBudget = 2'000'000;
  const SimpleGame& g_;
  std::size_t len_;
  std::size_t budget_ = 0;
  bool exhausted_ = false;
  std::vector<int> players_;
  std::array<int, 64> counts_{};
  std::vector<Coalition> parts_;
};

}  // namespace

std::string TradingTransform::to_string() const {
  return "CERT j=" + std::to_string(pre.size()) + ": WIN " + join(pre) + " | LOSE " + join(post);
}

void TradingTransform::canonicalize() {
  std::sort(pre.begin(), pre.end());
  std::sort(post.begin(), post.end());
}

bool verify_trading_transform(const TradingTransform& tt) {
  if (tt.pre.size() != tt.post.size()) throw InvalidInput("trading transform sides differ in length");
  return multiplicities(tt.pre) == multiplicities(tt.post);
}

bool verify_certificate(const SimpleGame& g, const TradingTransform& tt) {
  if (!verify_trading_transform(tt)) throw InvalidInput("trading transform is not balanced");
  const Coalition grand = g.grand_coalition();
  for (auto side : {&tt.pre, &tt.post})
    for (Coalition c : *side)
      if (!c.subset_of(grand)) throw InvalidInput("certificate coalition exceeds the player set");
  return std::all_of(tt.pre.begin(), tt.pre.end(), [&](Coalition x) { return g.is_winning(x); }) &&
         std::none_of(tt.post.begin(), tt.post.end(), [&](Coalition y) { return g.is_winning(y); });
}

CertificateSearch find_certificate(const SimpleGame& g, std::size_t max_len) {
  if (max_len < 2) throw InvalidInput("find_certificate: max_len must be at least 2");
  constexpr std::size_t kLatticeCap = std::size_t{1} << 26;
  constexpr double kLatticeWork = 2e9;
  CertificateSearch result;
  if (g.min_winning().empty()) {
    result.searched_up_to = max_len;
    return result;
  }
  std::vector<Coalition> losing;
  bool losing_ready = false;
  for (std::size_t len = 2; len <= max_len; ++len) {
    std::optional<TradingTransform> tt;
    bool use_lattice = g.player_count() <= 20 && SumLattice::fits(g.player_count(), len + 1, kLatticeCap);
    if (use_lattice && !losing_ready) {
      losing = all_losing(g);
      losing_ready = true;
    }
    if (use_lattice) {
      // shift-or work per layer: family size times lattice words
      const double words = static_cast<double>(SumLattice(g.player_count(), len + 1).size()) / 64.0 + 1.0;
      const double family = static_cast<double>(losing.size() + g.min_winning().size());
      use_lattice = family * words * static_cast<double>(len) <= kLatticeWork;
    }
    if (use_lattice) {
      tt = lattice_search(g, len, losing);
    } else {
      SplitSearch search(g, len);
      tt = search.run();
      if (!tt && search.exhausted()) return result;
    }
    if (tt) {
      tt->canonicalize();
      result.certificate = std::move(tt);
      result.searched_up_to = len;
      return result;
    }
    result.searched_up_to = len;
  }
  return result;
}

std::optional<TradingTransform> pair_incompatibility_certificate(const SimpleGame& g, Coalition y1, Coalition y2) {
  if (g.is_winning(y1) || g.is_winning(y2))
    throw PreconditionError("pair_incompatibility_certificate: both coalitions must be losing");
  // X1 + X2 = y1 + y2 as multisets: common players go to both sides, the
  // symmetric difference is split. Take X1 = common u (M & diff) for a minimal
  // winning M inside y1 u y2; that leaves X2 as large as possible.
  const Coalition common = y1 & y2;
  const Coalition diff = y1 ^ y2;
  const Coalition both = y1 | y2;
  for (Coalition m : g.min_winning()) {
    if (!m.subset_of(both)) continue;
    const Coalition x1 = common | (m & diff);
    const Coalition x2 = common | (diff - m);
    if (g.is_winning(x2)) {
      TradingTransform tt{{x1, x2}, {y1, y2}};
      tt.canonicalize();
      return tt;
    }
  }
  return std::nullopt;
}

}  // namespace simplegames
