#pragma once

#include <optional>
#include <vector>

#include "cylkit/signature.hpp"

namespace cylkit {

// Finite string of substitutions s_i^j and cylindrifications c_i, i,j < m.
struct ScToken {
    enum class Kind { Subst, Cyl };
    Kind kind;
    uint32_t i = 0, j = 0;
};

using ScWord = std::vector<ScToken>;

// Partial map m -> m induced by an sc word:
//   empty word   -> identity
//   w s_i^j      -> \hat{w} o [i|j]
//   w c_i        -> \hat{w} restricted to m \ {i}
std::vector<std::optional<uint32_t>> sc_word_map(const ScWord& w, uint32_t m);

}  // namespace cylkit
