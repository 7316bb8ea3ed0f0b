#include "chord/polynomial.hpp"

#include <algorithm>
#include <mutex>

namespace chord {

namespace {
std::vector<std::string>& registry() {
  static std::vector<std::string> names;
  return names;
}
std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

int Polynomial::var_id(const std::string& name) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& names = registry();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  names.push_back(name);
  return static_cast<int>(names.size() - 1);
}

const std::string& Polynomial::var_name(int id) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  return registry().at(static_cast<std::size_t>(id));
}

Polynomial::Monomial Polynomial::mul_mono(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      r.push_back(a[i++]);
    } else if (a[i].first > b[j].first) {
      r.push_back(b[j++]);
    } else {
      int e = a[i].second + b[j].second;
      if (e != 0) r.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back(b[j]);
  return r;
}

Rat Polynomial::eval(const std::map<int, Rat>& assign) const {
  Rat total(0);
  for (const auto& [m, c] : terms_) {
    Rat v = c;
    for (const auto& [var, exp] : m) {
      auto it = assign.find(var);
      if (it == assign.end())
        throw std::invalid_argument("unassigned symbol " + var_name(var));
      Rat base = it->second;
      int e = exp;
      if (e < 0) {
        if (base == 0) throw std::domain_error("zero base with negative exponent");
        base = Rat(1) / base;
        e = -e;
      }
      for (int r = 0; r < e; ++r) v *= base;
    }
    total += v;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Sort display terms by variable names for output that does not
  // depend on symbol registration order.
  std::vector<std::pair<std::string, std::string>> parts;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (const auto& [var, exp] : m) {
      if (!mono.empty()) mono += '*';
      mono += var_name(var);
      if (exp != 1) mono += '^' + std::to_string(exp);
    }
    parts.emplace_back(mono, rat_to_string(c));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& [mono, coeff] : parts) {
    if (!out.empty()) out += " + ";
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

}  // namespace chord
