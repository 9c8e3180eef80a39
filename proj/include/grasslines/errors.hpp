#pragma once

#include <stdexcept>
#include <string>

namespace grasslines {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural assumption guaranteed by the geometry was contradicted by a
// computation. Always a bug or bad input, never a recoverable condition.
struct invariant_violation : error {
    using error::error;
};

// Pencil fails the generality hypotheses (or needs data outside Q).
struct not_general : error {
    using error::error;
};

// A line that was required to lie on the section does not.
struct non_member : error {
    std::string pairing_a, pairing_b;
    non_member(std::string msg, std::string pa, std::string pb)
        : error(std::move(msg)), pairing_a(std::move(pa)), pairing_b(std::move(pb)) {}
};

} // namespace grasslines
