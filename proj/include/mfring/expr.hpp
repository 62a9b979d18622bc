#pragma once

// Prefix expressions over named forms and series constructors, e.g.
//   scale 1/1728 (sub (pow E4 3) (pow E6 2))
//   mul (zeta 1 4) 1/2 (sub f[1;chi5] (conj f[1;chi5]))
//
// Operators: add, sub, neg, mul (alias scale), pow X k, V h X, low h X,
// conj X, zeta a b. The outermost application may omit its parentheses.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mfring/characters.hpp"
#include "mfring/cyclo.hpp"

namespace mfring {

struct Expr {
  enum class Kind { Number, Atom, Apply };

  Kind kind = Kind::Number;
  Rational number;
  std::string name;  // atom text or operator
  std::vector<Expr> args;
  std::vector<long> ints;  // integer parameters: pow exponent, V/low index, zeta a b
};

Expr parse_expr(const std::string& text);

/// Built-in series constructors recognised as atoms.
struct AtomE { unsigned k; };
struct AtomC { unsigned N; };
struct AtomF { unsigned k; std::string chi; };
struct AtomG { unsigned k; std::string chi; };
struct AtomG2 { unsigned k; std::string chi, psi; };
struct AtomTheta { unsigned h; };
struct AtomAlpha23 {};
struct AtomBqf { long a, b, c; };
struct AtomForm { std::string name; };

using Atom = std::variant<AtomE, AtomC, AtomF, AtomG, AtomG2, AtomTheta, AtomAlpha23, AtomBqf, AtomForm>;

/// Classifies atom text; anything that is not a constructor is a form reference.
Atom classify_atom(const std::string& text);

/// Doubled weight of a constructor atom; nullopt for form references.
std::optional<int> atom_weight(const Atom& atom);

/// Root-of-unity order a constructor atom needs in its coefficient field.
unsigned atom_conductor(const Atom& atom);

}  // namespace mfring
