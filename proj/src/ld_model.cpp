#include "irc/ld_model.hpp"

namespace irc {

BitWord shift_down(const BitWord& v, int s) {
    if (s < 0) throw std::invalid_argument("negative shift");
    const int q = v.size();
    BitWord out(q);
    for (int i = s; i < q; ++i) out[i] = v[i - s];
    return out;
}

BitWord relay_output(const LdParams& p, const BitWord& x1, const BitWord& x2) {
    p.validate();
    const int q = p.q();
    if (x1.size() != q || x2.size() != q)
        throw std::invalid_argument("relay_output: word length != q");
    return shift_down(x1, q - p.n_s) ^ shift_down(x2, q - p.n_s);
}

BitWord rx_output(const LdParams& p, int j, const BitWord& x1, const BitWord& x2,
                  const BitWord& xr) {
    p.validate();
    if (j != 1 && j != 2) throw std::invalid_argument("rx_output: receiver index must be 1 or 2");
    const int q = p.q();
    if (x1.size() != q || x2.size() != q || xr.size() != q)
        throw std::invalid_argument("rx_output: word length != q");
    const BitWord& own = (j == 1) ? x1 : x2;
    const BitWord& other = (j == 1) ? x2 : x1;
    return shift_down(own, q - p.n_d) ^ shift_down(other, q - p.n_c) ^
           shift_down(xr, q - p.n_r);
}

}  // namespace irc
