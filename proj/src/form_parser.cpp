#include "mf/form_parser.hpp"

#include <cctype>
#include <memory>
#include <vector>

#include "mf/classical.hpp"
#include "mf/errors.hpp"
#include "mf/hecke.hpp"

namespace mf {

namespace {

enum class AtomKind { eisenstein, delta, j, eigenform };

struct Node {
    AtomKind kind = AtomKind::delta;
    long param = 0;  // weight for eisenstein/eigenform
    long exponent = 1;
    std::vector<Node> factors;  // nonempty for a product node
};

long atom_valuation(const Node& node) {
    switch (node.kind) {
        case AtomKind::eisenstein: return 0;
        case AtomKind::delta: return 1;
        case AtomKind::j: return -1;
        case AtomKind::eigenform: return 1;
    }
    return 0;
}

long net_valuation(const Node& node) {
    if (node.factors.empty()) return atom_valuation(node) * node.exponent;
    long v = 0;
    for (const Node& f : node.factors) v += net_valuation(f);
    return v * node.exponent;
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Node parse() {
        Node root = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input at position " + std::to_string(pos_),
                             pos_);
        return root;
    }

private:
    Node parse_expr() {
        Node product;
        product.factors.push_back(parse_term());
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            product.factors.push_back(parse_term());
            skip_ws();
        }
        if (product.factors.size() == 1) return product.factors.front();
        return product;
    }

    Node parse_term() {
        Node node = parse_atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            node.exponent *= parse_integer();
        }
        return node;
    }

    Node parse_atom() {
        skip_ws();
        if (peek() == '(') {
            const std::size_t open = pos_++;
            Node inner = parse_expr();
            skip_ws();
            if (peek() != ')')
                throw ParseError("unclosed '(' opened at position " + std::to_string(open), open);
            ++pos_;
            return inner;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::string word = text_.substr(start, pos_ - start);
        if (word.empty())
            throw ParseError("expected a form name at position " + std::to_string(start), start);

        Node node;
        if (word == "delta") {
            node.kind = AtomKind::delta;
        } else if (word == "j") {
            node.kind = AtomKind::j;
        } else if (word == "E" || word == "eigenform") {
            const std::size_t digits = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == digits)
                throw ParseError("'" + word + "' needs a weight at position " +
                                     std::to_string(digits),
                                 digits);
            node.param = std::stol(text_.substr(digits, pos_ - digits));
            node.kind = word == "E" ? AtomKind::eisenstein : AtomKind::eigenform;
        } else {
            throw ParseError("unknown form '" + word + "' at position " + std::to_string(start),
                             start);
        }
        return node;
    }

    long parse_integer() {
        skip_ws();
        const std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == digits)
            throw ParseError("expected an integer exponent at position " + std::to_string(start),
                             start);
        return std::stol(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    const std::string& text_;
    std::size_t pos_ = 0;
};

// All atoms are built with the same window length; multiplication and
// powering preserve window length, so the net precision is valuation + window.
QSeries evaluate(const Node& node, long window) {
    QSeries value = [&]() -> QSeries {
        if (!node.factors.empty()) {
            QSeries acc = evaluate(node.factors.front(), window);
            for (std::size_t i = 1; i < node.factors.size(); ++i)
                acc = multiply(acc, evaluate(node.factors[i], window));
            return acc;
        }
        switch (node.kind) {
            case AtomKind::eisenstein: return eisenstein(node.param, window);
            case AtomKind::delta: return delta(window + 1);
            case AtomKind::j: return j_invariant(window - 1);
            case AtomKind::eigenform: return eigenform(node.param, window + 1);
        }
        throw Error("unreachable");
    }();
    return node.exponent == 1 ? value : power(value, node.exponent);
}

}  // namespace

QSeries parse_form(const std::string& text, long prec) {
    const Node root = Parser(text).parse();
    const long window = std::max<long>(2, prec - net_valuation(root));
    QSeries result = evaluate(root, window);
    if (result.prec() < prec)
        throw PrecisionTooSmall("parse_form: internal window fell short");
    return result.truncate(prec);
}

}  // namespace mf
