#include "gnorm/rat.hpp"

namespace gnorm {

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rat_from_string: empty text");
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("rat_from_string: cannot parse '" + text + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("rat_from_string: zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

std::string rat_to_string_pq(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return Rat(q);
}

long ceil_sqrt(long m) {
    if (m < 0) throw std::domain_error("ceil_sqrt: negative argument");
    mpz_class n(static_cast<long>(m)), root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) root += 1;
    return root.get_si();
}

mpz_class lcm_denominators(std::span<const Rat> rs) {
    mpz_class l(1);
    for (const Rat& r : rs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
    return l;
}

}  // namespace gnorm
