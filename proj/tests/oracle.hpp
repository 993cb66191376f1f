#pragma once

// Test-only reference free group: single-character letters, uppercase for
// inverses, reduction by repeated scanning. Shares no code with the library.

#include <cctype>
#include <map>
#include <string>

namespace oracle {

inline bool cancels(char a, char b) {
  return a != b && std::tolower(static_cast<unsigned char>(a)) ==
                       std::tolower(static_cast<unsigned char>(b));
}

inline std::string reduce(std::string w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (cancels(w[i], w[i + 1])) {
        w.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

inline std::string inverse(const std::string& w) {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) {
    c = std::isupper(static_cast<unsigned char>(c)) ? static_cast<char>(std::tolower(c))
                                                     : static_cast<char>(std::toupper(c));
  }
  return out;
}

using Map = std::map<char, std::string>;

inline std::string apply(const Map& m, const std::string& w) {
  std::string out;
  for (char c : w) {
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto it = m.find(lower);
    std::string img = it == m.end() ? std::string(1, lower) : it->second;
    out += std::islower(static_cast<unsigned char>(c)) ? img : inverse(img);
  }
  return reduce(out);
}

// The braid images as printed for beta = sigma_1 sigma_2^-1.
inline const Map& psi() {
  static const Map m{{'x', "yzY"}, {'y', "yZYxyzY"}, {'z', "y"}};
  return m;
}

// "y z^-1 y^-1" style from compact "yZY".
inline std::string spaced(const std::string& compact) {
  if (compact.empty()) return "1";
  std::string out;
  for (char c : compact) {
    if (!out.empty()) out += ' ';
    if (std::isupper(static_cast<unsigned char>(c))) {
      out += static_cast<char>(std::tolower(c));
      out += "^-1";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace oracle
