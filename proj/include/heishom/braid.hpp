#pragma once

#include <string>
#include <vector>

#include "heishom/heisenberg.hpp"

namespace heishom {

// Generators of the surface braid group: the classical half twists sigma_i
// and the surface loops alpha_r, beta_s, gamma_t.
enum class GenKind { Sigma, Alpha, Beta, Gamma };

struct BraidGenerator {
  GenKind kind;
  int index;  // sigma: 1..n-1, alpha/beta: 1..g, gamma: 1..m-1
  int exp;    // +1 or -1

  bool operator==(const BraidGenerator& o) const {
    return kind == o.kind && index == o.index && exp == o.exp;
  }
};

using BraidWord = std::vector<BraidGenerator>;

// Token grammar: letters s/a/b/c followed by a positive index, optional
// ^<integer> exponent (expanded into |e| letters), whitespace separated.
// Example: "a1 s1 b1^-1".  Throws std::invalid_argument on malformed input.
BraidWord parse_word(const std::string& text);
std::string word_to_string(const BraidWord& w);
BraidWord word_inverse(const BraidWord& w);

// Evaluate the defining surjection onto the Heisenberg group:
// sigma_i -> u = (1,0), alpha_r -> (0,a_r), beta_s -> (0,b_s),
// gamma_t -> (0,c_t), multiplied left to right over the written word.
// n >= 2 additionally validates sigma indices against the strand count;
// n < 0 skips that check.
HeisenbergElement phi_eval(const BraidWord& w, const SurfaceParams& P, int n = -1);

struct RelationFamilyResult {
  std::string name;
  int instances = 0;
  bool pass = true;
};

struct RelationReport {
  std::vector<RelationFamilyResult> families;
  bool all_pass = true;
};

// Verify that both sides of every instance of the braid-group relations
// (BR1, BR2, CR1, CR2, CR3, SCR) have equal images under phi_eval.
RelationReport check_relations(const SurfaceParams& P, int n);

}  // namespace heishom
