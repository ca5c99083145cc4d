#include "simplegames/coalition.hpp"

namespace simplegames {

Coalition Coalition::of(std::initializer_list<int> players) {
  std::uint64_t bits = 0;
  for (int p : players) bits |= std::uint64_t{1} << p;
  return Coalition(bits);
}

Coalition Coalition::of(const std::vector<int>& players) {
  std::uint64_t bits = 0;
  for (int p : players) bits |= std::uint64_t{1} << p;
  return Coalition(bits);
}

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string Coalition::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int p : members()) {
    if (!first) s += ',';
    s += std::to_string(p);
    first = false;
  }
  s += '}';
  return s;
}

}  // namespace simplegames
