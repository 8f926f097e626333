// Pieces of a cyclically reduced relator and the positive C'(1/6) test.

#ifndef SURFSUB_SMALLCANC_HPP_
#define SURFSUB_SMALLCANC_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "surfsub/words.hpp"

namespace surfsub {

  // All cyclic rotations of w and w^-1, sorted and deduplicated.
  // Throws std::invalid_argument unless w is nonempty and cyclically reduced.
  std::vector<Word> symmetrized_set(Word const& w);

  struct PieceData {
    std::size_t symmetrized_size = 0;
    std::size_t relator_length   = 0;
    std::size_t max_piece        = 0;
    // Maximal common prefixes of neighbouring conjugates in sorted order,
    // longest first. Every one is a prefix of at least two of the 2L
    // positioned conjugates (rotation i of w or of w^-1).
    std::vector<Word> pieces;
  };

  // A piece is a common prefix of two conjugates taken at distinct
  // positions, so a proper power u^k has w itself as a piece.
  PieceData max_piece_length(Word const& w);

  struct SmallCancellationVerdict {
    bool        positive = false;
    bool        fired    = false;  // positive and 6 * max_piece < length
    std::string note;
    PieceData   pieces;
  };

  // Works on the cyclic core of w. Throws std::invalid_argument on the
  // empty word.
  SmallCancellationVerdict criterion_positive_c16(Word const& w);

}  // namespace surfsub

#endif  // SURFSUB_SMALLCANC_HPP_
