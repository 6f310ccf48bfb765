#include "x3ent/rational.hpp"

#include <cctype>

namespace x3 {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    auto bad = [&] { throw std::invalid_argument("bad number: '" + s + "'"); };

    std::string body = s;
    // fraction form
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string num = body.substr(0, slash), den = body.substr(slash + 1);
        if (num.empty() || den.empty()) bad();
        try {
            Rat q(num + "/" + den);
            if (q.get_den() == 0) bad();
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            bad();
        }
    }
    // decimal form
    if (auto dot = body.find('.'); dot != std::string::npos) {
        bool neg = false;
        std::string t = body;
        if (t[0] == '+' || t[0] == '-') {
            neg = t[0] == '-';
            t = t.substr(1);
        }
        dot = t.find('.');
        std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
        if (ip.empty() && fp.empty()) bad();
        for (char c : ip + fp)
            if (!std::isdigit(static_cast<unsigned char>(c))) bad();
        Int num(ip.empty() ? "0" : ip);
        Int den = 1;
        for (char c : fp) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        Rat q(num, den);
        q.canonicalize();
        return neg ? Rat(-q) : q;
    }
    // integer form
    try {
        Rat q(body);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        bad();
    }
    return 0;  // unreachable
}

std::string format_rat(const Rat& qin) {
    Rat q = qin;
    q.canonicalize();  // tolerate values built straight from num/den pairs
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_crat(const CRat& z) {
    if (z.im == 0) return format_rat(z.re);
    std::string s = format_rat(z.re);
    s += (z.im > 0 ? "+" : "-");
    Rat a = abs(z.im);
    if (a != 1) s += format_rat(a) + "*";
    s += "i";
    return s;
}

}  // namespace x3
