#include "trisq/catalog.hpp"

#include <array>

namespace trisq::catalog {

namespace {

constexpr std::array<CoeffTriple, 10> kUniversalSst = {{
    {1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}, {1, 2, 4},
    {1, 3, 1}, {1, 4, 1}, {1, 4, 2}, {1, 8, 1}, {2, 2, 1},
}};

constexpr std::array<CoeffTriple, 15> kUniversalStt = {{
    {1, 1, 1}, {1, 2, 1}, {1, 2, 2}, {1, 3, 1}, {1, 4, 1},
    {1, 4, 2}, {1, 5, 2}, {1, 6, 1}, {1, 8, 1}, {2, 1, 1},
    {2, 2, 1}, {2, 4, 1}, {3, 2, 1}, {4, 1, 1}, {4, 2, 1},
}};

const std::vector<ConjecturedExceptions> kConjectured = {
    {"s+2s+3t", {23}},
    {"2s+4s+t", {20}},
    {"s+5s+2t", {19}},
    {"s+6s+t", {47}},
    {"s+s+5t", {3, 11, 12, 27, 129, 138, 273}},
    {"2s+3s+2t", {1, 19, 43, 94}},
    {"2s+5s+t", {4, 27}},
    {"3s+4s+t", {2, 11, 23, 50, 116, 135, 138}},
    {"s+2s+6t", {5, 13, 46, 161}},
    {"8s+t+t", {5, 40, 217}},
    {"s+8s+2t", {5, 40, 217}},
    {"2s+3t+2t", {1, 16}},
    {"2s+5t+t", {4}},
    {"4s+3t+t", {2, 11, 27, 38, 86, 93, 188, 323}},
    {"3s+5t+t", {2, 7}},
    {"3s+4t+2t", {1, 8, 11, 25}},
    {"4s+4t+t", {2, 108}},
    {"6s+2t+t", {4}},
    {"5s+4t+t", {2, 16, 31}},
    {"5s+3t+2t", {1, 4, 13, 19, 27, 46, 73, 97, 111, 123, 151, 168}},
    {"2t+2t+5t", {1, 3, 10, 16, 28, 43, 46, 85, 169, 175, 211, 223}},
    {"2s+4t+5t", {1, 3, 10, 16, 28, 43, 46, 85, 169, 175, 211, 223}},
    {"t+2t+6t", {4, 50}},
    {"2t+3t+4t", {1, 8, 31}},
    {"t+4t+5t", {2}},
};

constexpr std::array<const char*, 34> kAlmostUniversal = {{
    // a*s + b*s + c*t
    "s+2s+3t", "2s+4s+t", "s+6s+t",
    "s+s+5t", "2s+3s+2t", "3s+4s+t",
    "s+2s+6t", "s+5s+3t", "2s+4s+3t",
    "4s+4s+t", "s+4s+5t",
    "s+5s+2t", "2s+5s+4t", "s+8s+2t",
    // a*s + b*t + c*t
    "5s+t+t", "5s+2t+2t", "s+4t+2t",
    "8s+t+t", "2s+3t+2t", "3s+4t+2t",
    "2s+5t+t", "3s+5t+t", "5s+4t+t",
    "4s+4t+t", "5s+3t+2t",
    "4s+8t+t", "s+8t+2t", "2s+4t+5t",
    // a*t + b*t + c*t
    "t+4t+4t", "2t+3t+4t", "t+4t+5t",
    "t+t+8t", "2t+2t+5t", "t+2t+6t",
}};

}  // namespace

std::span<const CoeffTriple> universal_sst_vectors() { return kUniversalSst; }

std::span<const CoeffTriple> universal_stt_vectors() { return kUniversalStt; }

std::span<const ConjecturedExceptions> conjectured_exception_sets() { return kConjectured; }

std::span<const char* const> almost_universal_forms() { return kAlmostUniversal; }

}  // namespace trisq::catalog
