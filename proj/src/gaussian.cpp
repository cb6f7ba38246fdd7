#include "twistkit/gaussian.hpp"

#include <sstream>

namespace twistkit {

std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out += rational_str(re_);
    if (im_ != 0) {
        if (im_ == 1) {
            out += out.empty() ? "i" : "+i";
        } else if (im_ == -1) {
            out += "-i";
        } else {
            std::string s = rational_str(im_);
            if (!out.empty() && s[0] != '-') out += "+";
            out += s + "*i";
        }
    }
    return out;
}

}  // namespace twistkit
