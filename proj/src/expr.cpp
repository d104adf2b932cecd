#include "dsf/expr.hpp"

#include "dsf/canon.hpp"

#include <cctype>
#include <unordered_map>
#include <vector>

namespace dsf {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Graph parse() {
        Graph g = expression();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return g;
    }

private:
    Graph expression() {
        Graph g = term();
        while (accept('+'))
            g = disjoint_union(g, term());
        return g;
    }

    Graph term() {
        skip_space();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) &&
            !starts_with_word("4pan")) {
            int m = number();
            accept('*');
            return copies(m, atom());
        }
        return atom();
    }

    Graph atom() {
        skip_space();
        if (accept_word("paw"))
            return paw();
        if (accept_word("4pan"))
            return four_pan();
        if (accept_word("co4pan"))
            return co_four_pan();
        if (accept_word("house"))
            return house();
        if (accept_word("co(")) {
            Graph g = expression();
            expect(')');
            return complement(g);
        }
        if (accept_word("join(")) {
            Graph g = expression();
            expect(',');
            Graph h = expression();
            expect(')');
            return join(g, h);
        }
        if (accept('(')) {
            Graph g = expression();
            expect(')');
            return g;
        }
        if (pos_ >= text_.size())
            fail("expected a graph");
        char kind = text_[pos_++];
        accept('_');
        switch (kind) {
        case 'K': {
            int a = number();
            if (bipartite_follows()) {
                ++pos_;
                return complete_bipartite(a, number());
            }
            return complete(a);
        }
        case 'P':
            return path(number());
        case 'C':
            return cycle(number());
        default:
            fail("unknown graph name");
        }
    }

    // "K2,3" is bipartite, but in "join(K2,3K1)" the comma separates arguments.
    bool bipartite_follows() const {
        std::size_t i = pos_;
        if (i >= text_.size() || text_[i] != ',')
            return false;
        ++i;
        std::size_t digits = i;
        while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i])))
            ++i;
        if (i == digits)
            return false;
        if (i == text_.size())
            return true;
        char next = text_[i];
        return !(std::isalpha(static_cast<unsigned char>(next)) || next == '*' || next == '(');
    }

    int number() {
        skip_space();
        std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000)
                fail("number too large");
            ++pos_;
        }
        if (pos_ == start)
            fail("expected a number");
        return static_cast<int>(value);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    bool starts_with_word(std::string_view word) const { return text_.substr(pos_).starts_with(word); }

    bool accept_word(std::string_view word) {
        skip_space();
        if (!starts_with_word(word))
            return false;
        pos_ += word.size();
        return true;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("bad graph expression '" + std::string(text_) + "' at offset " +
                         std::to_string(pos_) + ": " + why);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

const std::unordered_map<Certificate, std::string, CertificateHash>& known_names() {
    static const auto table = [] {
        std::unordered_map<Certificate, std::string, CertificateHash> names;
        const char* exprs[] = {
            "K1",      "K2",      "2K1",     "K3",      "P3",      "K2+K1",   "3K1",
            "K4",      "P4",      "C4",      "K1,3",    "paw",     "K3+K1",   "P3+K1",
            "2K2",     "K2+2K1",  "4K1",     "C5",      "P5",      "house",   "4pan",
            "co4pan",  "K2,3",    "K2+K3",   "K5",      "5K1",     "K1,4",    "K4+K1",
            "2P3",     "K2+P4",   "K2+C4",   "P3+P4",   "3P3",     "K2+C5",   "C6",
            "2K3",     "K3,3",    "3K2",     "K6",      "6K1",     "join(2K1,P4)",
            "join(2K1,2K2)",      "join(K2+K1,K2+K1)",  "co(K2+2K1)",         "co(K1,3+K1)",
        };
        for (const char* e : exprs) {
            Graph g = parse_expression(e);
            names.try_emplace(certificate(g), e);
        }
        return names;
    }();
    return table;
}

}  // namespace

Graph parse_expression(std::string_view text) {
    return Parser(text).parse();
}

Graph parse_graph_argument(std::string_view text) {
    try {
        return parse_expression(text);
    } catch (const CapacityError&) {
        throw;
    } catch (const ParseError& named_error) {
        try {
            return parse_graph6(text);
        } catch (const CapacityError&) {
            throw;
        } catch (const ParseError&) {
            throw ParseError(std::string("not a named expression or graph6: ") + named_error.what());
        }
    }
}

std::string describe(const Graph& g) {
    if (g.order() > 8)
        return emit_graph6(g);
    const auto& names = known_names();
    auto it = names.find(certificate(g));
    return it != names.end() ? it->second : emit_graph6(g);
}

}  // namespace dsf
