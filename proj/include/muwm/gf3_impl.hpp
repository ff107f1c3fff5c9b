#pragma once

#include <string>
#include <vector>

#include "muwm/error.hpp"

namespace muwm::gf3 {

template <typename Visit>
void for_each_codeword(const Code& c, Visit&& visit, int cap) {
    const std::size_t dim = c.dimension();
    if (static_cast<long long>(dim) > cap)
        throw CapExceeded("code dimension " + std::to_string(dim) + " exceeds enumeration cap " +
                          std::to_string(cap));
    // Modular ternary Gray code: at step t the coefficient that moves is the
    // number of trailing 2s of the base-3 counter, and it moves by +1.
    Vector word(c.length());
    std::vector<std::uint8_t> counter(dim + 1, 0);
    visit(static_cast<const Vector&>(word));
    for (;;) {
        std::size_t j = 0;
        while (j < dim && counter[j] == 2) counter[j++] = 0;
        if (j == dim) break;
        ++counter[j];
        word.axpy(1, c.generator()[j]);
        visit(static_cast<const Vector&>(word));
    }
}

}  // namespace muwm::gf3
