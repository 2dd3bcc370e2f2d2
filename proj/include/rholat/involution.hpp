#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace rholat {

/// Orientation-preserving involutions of L(p,q) with 1-dimensional fixed set
/// that admit equivariant representations.
///   A       [z1, z2] -> [conj z1, conj z2]
///   B       [z1, z2] -> [z1, -z2]
///   Bprime  [z1, z2] -> [-z1, z2]
enum class Involution { A, B, Bprime };

inline std::string_view to_string(Involution inv)
{
    switch (inv) {
    case Involution::A:
        return "A";
    case Involution::B:
        return "B";
    case Involution::Bprime:
        return "Bprime";
    }
    return "?";
}

inline std::optional<Involution> parse_involution(std::string_view s)
{
    if (s == "A")
        return Involution::A;
    if (s == "B")
        return Involution::B;
    if (s == "Bprime" || s == "B'" || s == "Bp")
        return Involution::Bprime;
    return std::nullopt;
}

} // namespace rholat
