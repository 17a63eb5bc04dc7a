#include "permstat/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

namespace permstat {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::malformed: return "MALFORMED";
    case Errc::ambiguous: return "AMBIGUOUS";
    case Errc::size: return "SIZE";
    case Errc::range: return "RANGE";
    case Errc::unknown_name: return "UNKNOWN_NAME";
    case Errc::too_large: return "TOO_LARGE";
  }
  return "?";
}

namespace {

void validate_word(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  if (n < 1) throw Error(Errc::malformed, "empty permutation");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : word) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw Error(Errc::malformed,
                  "word is not a permutation of 1.." + std::to_string(n));
    seen[static_cast<size_t>(v)] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  validate_word(word_);
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw Error(Errc::malformed, "n must be >= 1");
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w), unchecked_t{});
}

Permutation Permutation::unchecked(std::vector<int> word) {
  return Permutation(std::move(word), unchecked_t{});
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>((*this)(i)) - 1] = i;
  return Permutation(std::move(inv), unchecked_t{});
}

Permutation parse(std::string_view text) {
  if (text.empty()) throw Error(Errc::malformed, "empty permutation text");

  std::vector<int> word;
  if (text.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t next = text.find(',', pos);
      std::string_view tok = text.substr(
          pos, next == std::string_view::npos ? std::string_view::npos
                                              : next - pos);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw Error(Errc::malformed, "bad entry '" + std::string(tok) + "'");
      word.push_back(v);
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw Error(Errc::malformed, "unexpected character in digit form");
      word.push_back(c - '0');
    }
    // A digit string of length >= 10 cannot denote a permutation letter-by-
    // letter; require the comma form instead of guessing a tokenization.
    if (word.size() > 9)
      throw Error(Errc::ambiguous, "digit form is only valid for n <= 9");
  }

  return Permutation(std::move(word));
}

std::string format(const Permutation& p) {
  std::ostringstream os;
  if (p.size() <= 9) {
    for (int v : p.word()) os << v;
  } else {
    for (int i = 1; i <= p.size(); ++i) {
      if (i > 1) os << ',';
      os << p(i);
    }
  }
  return os.str();
}

Permutation embed(const Permutation& p, int k) {
  std::vector<int> w = p.word();
  for (int i = 1; i <= k; ++i) w.push_back(p.size() + i);
  return Permutation::unchecked(std::move(w));
}

Permutation special(Special kind, int n) {
  if (n < 1) throw Error(Errc::size, "n must be >= 1");
  std::vector<int> w(static_cast<size_t>(n));
  switch (kind) {
    case Special::identity:
      std::iota(w.begin(), w.end(), 1);
      break;
    case Special::pi0:
      for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n - i;
      break;
    case Special::pi1:
      for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 2;
      w[static_cast<size_t>(n) - 1] = 1;
      break;
    case Special::pi1inv:
      w[0] = n;
      for (int i = 1; i < n; ++i) w[static_cast<size_t>(i)] = i;
      break;
    case Special::pi2:
      if (n < 2) throw Error(Errc::size, "pi2 needs n >= 2");
      std::iota(w.begin(), w.end(), 1);
      std::swap(w.front(), w.back());
      break;
    case Special::near_identity:
      if (n < 2) throw Error(Errc::size, "near_identity needs n >= 2");
      std::iota(w.begin(), w.end(), 1);
      std::swap(w[0], w[1]);
      break;
  }
  return Permutation::unchecked(std::move(w));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << format(p);
}

}  // namespace permstat
