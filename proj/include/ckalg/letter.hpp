// Generator letters.  A letter is identified by a family plus up to two
// indices; presentations assign each letter a rank (its position in the
// letter order), a display name, a weight and a sector tag.
#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ckalg {

enum class LetterFamily : uint8_t {
    Gen,    // J/X generator at triangle position (row, col), 0 <= row < col <= N
    Exp,    // Z, the group-like exponential of the (0,N) generator
    ExpInv, // Z^-1
    R,      // dual rotation matrix entry R(i,j), 1 <= i,j <= n
    Rinv,   // dual inverse matrix entry
    DualX,  // dual coordinate x_i
    DualY,  // dual coordinate y_i
    Chi,    // dual coordinate of the central generator
};

struct LetterId {
    LetterFamily fam = LetterFamily::Gen;
    int16_t a = 0;
    int16_t b = 0;

    friend auto operator<=>(const LetterId&, const LetterId&) = default;
};

inline LetterId gen_id(int row, int col) {
    return {LetterFamily::Gen, static_cast<int16_t>(row), static_cast<int16_t>(col)};
}
inline LetterId exp_id() { return {LetterFamily::Exp, 0, 0}; }
inline LetterId exp_inv_id() { return {LetterFamily::ExpInv, 0, 0}; }

// Sector of a generator relative to a split index a (figure-1 triangle).
enum class Sector : uint8_t {
    XSector,      // translations: row < a and col >= a
    JLeft,        // left triangle: col < a
    JRight,       // right triangle: row >= a
    Exponential,  // Z, Z^-1 (counted with the X-sector subalgebra)
};

inline Sector sector_of_position(int row, int col, int split) {
    if (row < split && col >= split) return Sector::XSector;
    if (col < split) return Sector::JLeft;
    return Sector::JRight;
}

// Rank of a letter within a presentation's total letter order.
using Letter = uint16_t;

}  // namespace ckalg
