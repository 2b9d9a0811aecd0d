#include "redchern/render.hpp"

#include <cctype>

namespace redchern {

namespace {

// Splits "c12" into ("c", "12"); names without a numeric suffix have no index.
std::pair<std::string, std::string> split_index(const std::string& name) {
  std::size_t cut = name.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
  if (cut == 0 || cut == name.size()) return {name, ""};
  return {name.substr(0, cut), name.substr(cut)};
}

std::string braced(const std::string& s) { return s.size() == 1 ? s : "{" + s + "}"; }

struct Style {
  bool latex;
};

std::string render(const MPoly& p, Style style) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.canonical_terms()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const Variable& v = p.vars()[i];
      if (!mono.empty()) mono += style.latex ? " " : "*";
      mono += style.latex ? variable_latex(v) : variable_text(v);
      if (e[i] > 1) {
        const std::string k = std::to_string(e[i]);
        mono += "^" + (style.latex ? braced(k) : k);
      }
    }

    const bool unit = mag == 1;
    std::string coeff;
    if (!unit || mono.empty()) {
      if (style.latex && mag.get_den() != 1) {
        coeff = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
      } else {
        coeff = format_rational(mag);
      }
    }
    if (coeff.empty()) {
      out += mono;
    } else if (mono.empty()) {
      out += coeff;
    } else {
      out += coeff + (style.latex ? " " : "*") + mono;
    }
  }
  return out;
}

}  // namespace

std::string variable_text(const Variable& v) {
  const auto [stem, index] = split_index(v.name);
  return index.empty() ? stem : stem + "_" + index;
}

std::string variable_latex(const Variable& v) {
  auto [stem, index] = split_index(v.name);
  if (stem == "xi") stem = "\\xi";
  return index.empty() ? stem : stem + "_" + braced(index);
}

std::string to_text(const MPoly& p) { return render(p, Style{false}); }

std::string to_latex(const MPoly& p) { return render(p, Style{true}); }

}  // namespace redchern
