#include "cogassess/comparison.hpp"

namespace cogassess {

std::string_view to_string(Winner w) {
  switch (w) {
    case Winner::First:
      return "first";
    case Winner::Second:
      return "second";
    case Winner::Tie:
      return "tie";
  }
  return "?";
}

std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::PrimaryXc:
      return "primary-xc";
    case Basis::SecondaryYcHigh:
      return "secondary-yc-high-branch";
    case Basis::SecondaryYcLow:
      return "secondary-yc-low-branch";
    case Basis::ExactTie:
      return "exact-tie";
  }
  return "?";
}

std::string_view to_string(Label l) {
  return l == Label::Satisfactory ? "satisfactory" : "unsatisfactory";
}

}  // namespace cogassess
