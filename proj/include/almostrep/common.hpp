#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ar {

// Exact arithmetic used by the chain/cochain/ring layers.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Input that violates a precondition (bad shapes, mismatched groups, even n
// for ESS leaves, ...). The CLI maps this to exit code 2.
class bad_input : public std::invalid_argument {
public:
    explicit bad_input(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical guarantee failed at runtime (branch ambiguity near -1, gap
// violation, bound exceeded, unexpected non-unitary input). Exit code 1.
class check_failure : public std::runtime_error {
public:
    explicit check_failure(const std::string& what) : std::runtime_error(what) {}
};

inline long long rat_to_ll(const Rat& r) {
    if (denominator(r) != 1) throw check_failure("rational is not an integer: " + r.str());
    return static_cast<long long>(numerator(r));
}

inline double rat_to_double(const Rat& r) {
    return static_cast<double>(r);
}

} // namespace ar
