#pragma once

#include <map>
#include <optional>

#include "hrf/padic.hpp"
#include "hrf/roots.hpp"

// Reference computations from classical formulas. Nothing here goes through
// the path module or the HR-form machinery.

namespace hrf::oracle {

/// Weight -> multiplicity of the simple characteristic-0 module L(lambda).
using CharacterTable = std::map<Weight, long>;

/// prod over positive coroots of <lambda + rho, g^vee> / <rho, g^vee>.
Integer weyl_dim(const RootSystem& rs, const Weight& lambda);

/// Freudenthal's multiplicity recursion.
CharacterTable freudenthal_character(const RootSystem& rs, const Weight& lambda);

/// l! * n (n-1) ... (n-l+1): the A1 path form on (alpha^l, alpha^l) for highest weight n.
Integer sl2_gram(long n, long l);

struct TiltingFixture {
  LatticeModule lattice;
  BlockForm form;  ///< ambient coordinates
  Rational summand_scale;  ///< scale of the form on the L(p-2) summand
  long index_exponent = 0; ///< [M : Delta(p) + Delta(p-2)] = p^index_exponent
  std::size_t candidates_examined = 0;
};

/// Brute-force search for a self-dual divided-power-stable lattice in
/// L_Q(p) + L_Q(p-2) (A1), over graded superlattices M of the standard lattice
/// with p M contained in the standard lattice and index at most p^max_index_exponent.
/// The default bound is p^(p-1). nullopt when the search exhausts.
std::optional<TiltingFixture> sl2_tilting_fixture(unsigned long p, std::optional<long> max_index_exponent = std::nullopt);

}  // namespace hrf::oracle
