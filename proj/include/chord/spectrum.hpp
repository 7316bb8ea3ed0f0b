#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chord {

// Sparse finite mapping index -> multiplicity. Canonical form: entries
// sorted by index, no zero multiplicities. Carries the b, n, p and v
// vectors of a diagram type as well as s/t monomial exponents.
class Spectrum {
 public:
  using Entry = std::pair<int, int>;  // (index, multiplicity > 0)

  Spectrum() = default;
  Spectrum(std::initializer_list<Entry> entries) {
    for (const auto& e : entries) bump(e.first, e.second);
  }

  static Spectrum unit(int index, int mult = 1) {
    Spectrum s;
    s.bump(index, mult);
    return s;
  }

  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  int mult(int index) const {
    auto it = find(index);
    return it == entries_.end() ? 0 : it->second;
  }

  // Number of parts: sum of multiplicities.
  long size() const {
    long s = 0;
    for (const auto& [i, m] : entries_) s += m;
    return s;
  }

  // Sum of index * multiplicity.
  long weight() const {
    long w = 0;
    for (const auto& [i, m] : entries_) w += static_cast<long>(i) * m;
    return w;
  }

  int max_index() const { return entries_.empty() ? -1 : entries_.back().first; }

  // Adds delta (possibly negative) to one multiplicity; throws if the
  // result would be negative.
  void bump(int index, int delta) {
    if (delta == 0) return;
    if (index < 0) throw std::invalid_argument("negative spectrum index");
    auto it = lower_bound(index);
    if (it != entries_.end() && it->first == index) {
      it->second += delta;
      if (it->second < 0) throw std::underflow_error("negative multiplicity");
      if (it->second == 0) entries_.erase(it);
    } else {
      if (delta < 0) throw std::underflow_error("negative multiplicity");
      entries_.insert(it, {index, delta});
    }
  }

  Spectrum with(int index, int delta) const {
    Spectrum s = *this;
    s.bump(index, delta);
    return s;
  }

  Spectrum operator+(const Spectrum& o) const {
    Spectrum s = *this;
    for (const auto& [i, m] : o.entries_) s.bump(i, m);
    return s;
  }

  // Componentwise subtraction; nullopt if any entry would go negative.
  std::optional<Spectrum> minus(const Spectrum& o) const {
    Spectrum s = *this;
    for (const auto& [i, m] : o.entries_) {
      if (s.mult(i) < m) return std::nullopt;
      s.bump(i, -m);
    }
    return s;
  }

  auto operator<=>(const Spectrum& o) const = default;
  bool operator==(const Spectrum& o) const = default;

  // Compact display form, e.g. "e0^2+e3"; "0" for the empty spectrum.
  std::string to_string() const {
    if (entries_.empty()) return "0";
    std::string out;
    for (const auto& [i, m] : entries_) {
      if (!out.empty()) out += '+';
      out += 'e' + std::to_string(i);
      if (m > 1) out += '^' + std::to_string(m);
    }
    return out;
  }

 private:
  std::vector<Entry>::const_iterator find(int index) const {
    auto it = lower_bound(index);
    if (it != entries_.end() && it->first == index) return it;
    return entries_.end();
  }
  std::vector<Entry>::const_iterator lower_bound(int index) const {
    return std::lower_bound(entries_.begin(), entries_.end(), index,
                            [](const Entry& e, int i) { return e.first < i; });
  }
  std::vector<Entry>::iterator lower_bound(int index) {
    return std::lower_bound(entries_.begin(), entries_.end(), index,
                            [](const Entry& e, int i) { return e.first < i; });
  }

  std::vector<Entry> entries_;
};

}  // namespace chord
