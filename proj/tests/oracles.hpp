#ifndef ORESLICE_TESTS_ORACLES_HPP_
#define ORESLICE_TESTS_ORACLES_HPP_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oreslice/backend.hpp"
#include "oreslice/semiring.hpp"
#include "oreslice/words.hpp"

namespace oracle {

  using oreslice::Backend;
  using oreslice::Element;
  using oreslice::Word;

  // Fox calculus over Z[Z^m]: w is trivial in the free metabelian group of
  // rank m iff its abelianization and all m free derivatives vanish.
  bool fox_trivial(Word const& w, std::size_t m);

  // Exhaustive multiset search: is there a pair of multisets U, V over pool
  // with 1 <= |U| = |V| <= n and (1+a)U = (1+b)V as multisets?
  bool brute_force_common_multiple(Backend const&              backend,
                                   Element const&              a,
                                   Element const&              b,
                                   std::vector<Element> const& pool,
                                   std::size_t                 n);

  // All 2^k words over gens g0 g1 g0 g1 ... of length k with free signs.
  std::vector<Word> alternating_words(oreslice::Generator const& even,
                                      oreslice::Generator const& odd,
                                      std::size_t                length);

  // Random word of length <= max_len over generators, inverse letters only
  // when allow_inverse.
  Word random_word(std::mt19937_64&                        rng,
                   std::vector<oreslice::Generator> const& gens,
                   std::size_t                             max_len,
                   bool                                    allow_inverse);

  // Up to three terms of words of length <= 4 over x0..x2 or a, b.
  oreslice::SemiringElement random_element(std::mt19937_64&            rng,
                                           oreslice::BackendPtr const& backend,
                                           oreslice::Coefficients      mode);

  // Box [0,n)^2 in Z^2, counted directly.
  std::int64_t box_symmetric_difference(std::int64_t n);

}  // namespace oracle

#endif  // ORESLICE_TESTS_ORACLES_HPP_
