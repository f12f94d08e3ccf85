#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace crossalg {

// Exact rational scalar. mpq_class keeps values canonicalized
// (coprime numerator/denominator, positive denominator).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q". Rejects zero denominators.
inline Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rat q(text);
            q.canonicalize();
            return q;
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

// "p" when integral, "p/q" otherwise.
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace crossalg
