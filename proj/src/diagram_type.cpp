#include "chord/diagram_type.hpp"

namespace chord {

bool validate_type(const DiagramType& t) {
  if (t.k < 0 || t.l < 0 || t.genusOrH < 0) return false;
  const long b = t.bSpec.size();
  const long n = t.nSpec.size();
  if (b < 1 || n < 1) return false;
  if (t.nSpec.weight() != t.l) return false;
  if (t.bSpec.weight() != 2L * t.k + t.l) return false;
  if (t.pSpec) {
    if (t.pSpec->size() != n) return false;
    if (t.pSpec->weight() != 2L * t.k + b) return false;
    if (t.pSpec->mult(0) != 0) return false;  // lengths start at 1
  }
  const long chi = b - t.k + n;  // Euler characteristic of the surface
  if (t.orient == Orientability::Orientable)
    return chi == 2 - 2L * t.genusOrH;
  return chi == 2 - static_cast<long>(t.genusOrH);
}

std::string DiagramType::to_string() const {
  std::string s = orient == Orientability::Orientable ? "{g=" : "{h=";
  s += std::to_string(genusOrH);
  s += ",k=" + std::to_string(k);
  s += ",l=" + std::to_string(l);
  s += ";b=" + bSpec.to_string();
  s += ";n=" + nSpec.to_string();
  if (pSpec) s += ";p=" + pSpec->to_string();
  s += "}";
  return s;
}

}  // namespace chord
