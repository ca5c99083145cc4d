#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simplegames/game.hpp"

namespace simplegames {

/// Two equal-length coalition sequences (X_1..X_j; Y_1..Y_j).
struct TradingTransform {
  std::vector<Coalition> pre;
  std::vector<Coalition> post;

  std::size_t length() const { return pre.size(); }
  /// "CERT j=2: WIN {..},{..} | LOSE {..},{..}"
  std::string to_string() const;
  /// Sorts both sides into canonical coalition order.
  void canonicalize();
};

/// Balance check: every player occurs equally often on both sides.
/// Throws InvalidInput when the sides differ in length.
bool verify_trading_transform(const TradingTransform& tt);

/// True iff tt is balanced, all pre-coalitions win and all post-coalitions lose.
/// Throws InvalidInput for unbalanced or mismatched transforms.
bool verify_certificate(const SimpleGame& g, const TradingTransform& tt);

struct CertificateSearch {
  std::optional<TradingTransform> certificate;
  /// Largest length searched exhaustively; nullopt never means "weighted"
  /// unless this bound is known to be sufficient for the game size.
  std::size_t searched_up_to = 0;
};

inline constexpr std::size_t kDefaultCertificateLength = 4;

/// Searches certificates of length 2..max_len, shortest first.
CertificateSearch find_certificate(const SimpleGame& g, std::size_t max_len = kDefaultCertificateLength);

/// Searches a length-2 certificate (X1, X2; y1, y2). Both y's must lose
/// (PreconditionError otherwise). A result proves y1 and y2 incompatible;
/// nullopt does not prove compatibility.
std::optional<TradingTransform> pair_incompatibility_certificate(const SimpleGame& g, Coalition y1, Coalition y2);

}  // namespace simplegames
