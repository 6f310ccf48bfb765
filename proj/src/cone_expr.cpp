#include <algorithm>
#include <cctype>

#include "x3ent/cones.hpp"

namespace x3 {

namespace {

struct Node {
    enum Type { Leaf, Meet, Join } type = Leaf;
    int atom = 0;       // Leaf
    bool star = false;  // Leaf
    std::vector<Node> kids;

    std::string key() const {
        if (type == Leaf) {
            std::string s(1, static_cast<char>('A' + atom));
            if (star) s += '*';
            return s;
        }
        std::string s = type == Meet ? "M(" : "J(";
        for (const Node& k : kids) s += k.key() + ",";
        return s + ")";
    }
};

// flatten nested same-type ops and sort children for a canonical form
void normalize(Node& n) {
    if (n.type == Node::Leaf) return;
    std::vector<Node> flat;
    for (Node& k : n.kids) {
        normalize(k);
        if (k.type == n.type)
            for (Node& g : k.kids) flat.push_back(std::move(g));
        else
            flat.push_back(std::move(k));
    }
    n.kids = std::move(flat);
    std::sort(n.kids.begin(), n.kids.end(),
              [](const Node& a, const Node& b) { return a.key() < b.key(); });
}

// De Morgan dual: swap meet/join, toggle leaf stars
void dualize(Node& n) {
    if (n.type == Node::Leaf) {
        n.star = !n.star;
        return;
    }
    n.type = n.type == Node::Meet ? Node::Join : Node::Meet;
    for (Node& k : n.kids) dualize(k);
}

struct Parser {
    const std::string& s;
    size_t pos = 0;
    std::string err;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool factor(Node& out) {
        skip();
        if (pos >= s.size()) {
            err = "unexpected end of expression";
            return false;
        }
        char c = s[pos];
        if (c == '(') {
            ++pos;
            if (!expr(out)) return false;
            if (!eat(')')) {
                err = "missing ')'";
                return false;
            }
            if (eat('*')) dualize(out);
            return true;
        }
        char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (up == 'A' || up == 'B' || up == 'C') {
            ++pos;
            out = Node{};
            out.type = Node::Leaf;
            out.atom = up - 'A';
            if (eat('*')) out.star = true;
            return true;
        }
        err = std::string("unexpected character '") + c + "'";
        return false;
    }

    bool term(Node& out) {
        Node first;
        if (!factor(first)) return false;
        std::vector<Node> kids;
        kids.push_back(std::move(first));
        while (eat('^')) {
            Node k;
            if (!factor(k)) return false;
            kids.push_back(std::move(k));
        }
        if (kids.size() == 1) {
            out = std::move(kids[0]);
        } else {
            out.type = Node::Meet;
            out.kids = std::move(kids);
        }
        return true;
    }

    bool expr(Node& out) {
        Node first;
        if (!term(first)) return false;
        std::vector<Node> kids;
        kids.push_back(std::move(first));
        for (;;) {
            skip();
            if (pos < s.size() && (s[pos] == 'v' || s[pos] == 'V')) {
                // 'v' is the join operator; atoms are only A/B/C so this is
                // unambiguous
                ++pos;
                Node k;
                if (!term(k)) return false;
                kids.push_back(std::move(k));
                continue;
            }
            break;
        }
        if (kids.size() == 1) {
            out = std::move(kids[0]);
        } else {
            out.type = Node::Join;
            out.kids = std::move(kids);
        }
        return true;
    }
};

bool collect_stars(const Node& n, bool& any, bool& all) {
    if (n.type == Node::Leaf) {
        any = any || n.star;
        all = all && n.star;
        return true;
    }
    for (const Node& k : n.kids)
        if (!collect_stars(k, any, all)) return false;
    return true;
}

void strip_stars(Node& n) {
    if (n.type == Node::Leaf) {
        n.star = false;
        return;
    }
    for (Node& k : n.kids) strip_stars(k);
}

Node leaf(Atom x) {
    Node n;
    n.type = Node::Leaf;
    n.atom = static_cast<int>(x);
    return n;
}

Node op(Node::Type t, std::vector<Node> kids) {
    Node n;
    n.type = t;
    n.kids = std::move(kids);
    return n;
}

Node shape_tree(const ConeId& id) {
    Atom x = id.which;
    Atom y, z;
    switch (x) {
        case Atom::A: y = Atom::B; z = Atom::C; break;
        case Atom::B: y = Atom::A; z = Atom::C; break;
        default: y = Atom::A; z = Atom::B;
    }
    switch (id.shape) {
        case Shape::Bottom:
            return op(Node::Meet, {leaf(Atom::A), leaf(Atom::B), leaf(Atom::C)});
        case Shape::Meet2: return op(Node::Meet, {leaf(y), leaf(z)});
        case Shape::JoinOfMeets:
            return op(Node::Join, {op(Node::Meet, {leaf(x), leaf(y)}),
                                   op(Node::Meet, {leaf(x), leaf(z)})});
        case Shape::MeetAtomJoin:
            return op(Node::Meet, {leaf(x), op(Node::Join, {leaf(y), leaf(z)})});
        case Shape::Atom: return leaf(x);
        case Shape::JoinAtomMeet:
            return op(Node::Join, {leaf(x), op(Node::Meet, {leaf(y), leaf(z)})});
        case Shape::MeetOfJoins:
            return op(Node::Meet, {op(Node::Join, {leaf(x), leaf(y)}),
                                   op(Node::Join, {leaf(x), leaf(z)})});
        case Shape::Join2: return op(Node::Join, {leaf(y), leaf(z)});
        default:
            return op(Node::Join, {leaf(Atom::A), leaf(Atom::B), leaf(Atom::C)});
    }
}

}  // namespace

std::optional<ParsedCone> parse_cone(const std::string& text, std::string* error) {
    auto fail = [&](const std::string& msg) -> std::optional<ParsedCone> {
        if (error) *error = msg;
        return std::nullopt;
    };
    Parser p(text);
    Node root;
    if (!p.expr(root)) return fail(p.err);
    p.skip();
    if (p.pos != p.s.size()) return fail("trailing input after expression");

    bool any = false, all = true;
    collect_stars(root, any, all);
    if (any && !all) return fail("mixed dual and primal atoms");
    bool dual = any;
    strip_stars(root);
    normalize(root);
    const std::string key = root.key();

    for (const ConeId& base : cone_catalog()) {
        Node t = shape_tree(base);
        normalize(t);
        if (t.key() != key) continue;
        ParsedCone out;
        out.id = base;
        out.id.dual = dual;
        // permutation taking the A-distinguished representative to this cone
        out.perm = {Atom::A, Atom::B, Atom::C};
        if (base.shape != Shape::Bottom && base.shape != Shape::Top &&
            base.which != Atom::A)
            std::swap(out.perm[0], out.perm[static_cast<int>(base.which)]);
        if (error) error->clear();
        return out;
    }
    return fail("expression is not one of the lattice shapes");
}

}  // namespace x3
