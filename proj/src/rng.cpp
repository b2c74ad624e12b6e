#include "qwoa/rng.hpp"

namespace qwoa {
namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv1a(std::uint64_t h, std::string_view bytes) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xffULL;
        h *= kFnvPrime;
    }
    return h;
}

std::uint64_t finish(std::uint64_t master, std::uint64_t h) {
    SplitMix64 mix(master ^ h);
    return mix.next();
}

} // namespace

std::uint64_t derive_stream(std::uint64_t master, std::string_view tag) {
    return finish(master, fnv1a(kFnvOffset, tag));
}

std::uint64_t derive_stream(std::uint64_t master, std::string_view tag, std::uint64_t a) {
    return finish(master, fnv1a(fnv1a(kFnvOffset, tag), a));
}

std::uint64_t derive_stream(std::uint64_t master, std::string_view tag, std::uint64_t a,
                            std::uint64_t b) {
    return finish(master, fnv1a(fnv1a(fnv1a(kFnvOffset, tag), a), b));
}

std::uint64_t derive_stream(std::uint64_t master, std::string_view tag, std::uint64_t a,
                            std::uint64_t b, std::uint64_t c) {
    return finish(master, fnv1a(fnv1a(fnv1a(fnv1a(kFnvOffset, tag), a), b), c));
}

} // namespace qwoa
