#include "cylkit/sc_word.hpp"

#include "cylkit/common.hpp"

namespace cylkit {

std::vector<std::optional<uint32_t>> sc_word_map(const ScWord& w, uint32_t m) {
    std::vector<std::optional<uint32_t>> hat(m);
    for (uint32_t x = 0; x < m; ++x) hat[x] = x;
    for (const auto& tok : w) {
        if (tok.i >= m || (tok.kind == ScToken::Kind::Subst && tok.j >= m))
            throw InputError("sc_word_map: token index out of range");
        if (tok.kind == ScToken::Kind::Subst) {
            // (w s_i^j)^ = \hat{w} o [i|j]; [i|j] maps i to j and fixes the rest
            std::vector<std::optional<uint32_t>> next(m);
            for (uint32_t x = 0; x < m; ++x) next[x] = hat[x == tok.i ? tok.j : x];
            hat = std::move(next);
        } else {
            hat[tok.i] = std::nullopt;
        }
    }
    return hat;
}

}  // namespace cylkit
