#include "mfdecomp/poly_parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "mfdecomp/errors.hpp"

namespace mfd {

namespace {

class ExpressionParser {
  public:
    ExpressionParser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

    Polynomial parse() {
        Polynomial f = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
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

    Polynomial expr() {
        Polynomial f = term();
        for (;;) {
            if (accept('+'))
                f += term();
            else if (accept('-'))
                f -= term();
            else
                return f;
        }
    }

    Polynomial term() {
        Polynomial f = unary();
        for (;;) {
            if (accept('*')) {
                f = f * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Polynomial d = unary();
                const Exponents zero(names_.size(), 0);
                if (d.is_zero() || d.terms().size() != 1 || d.terms().begin()->first != zero) {
                    pos_ = at;
                    fail("division by a non-constant or zero");
                }
                f *= Rational(1) / d.terms().begin()->second;
            } else {
                return f;
            }
        }
    }

    Polynomial unary() {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (!accept('^'))
            return base;
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_ || pos_ - start > 4)
            fail("expected a small nonnegative exponent");
        return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }

    Polynomial atom() {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial f = expr();
            if (!accept(')'))
                fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return Polynomial::constant(names_.size(), Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            auto it = std::find(names_.begin(), names_.end(), name);
            if (it == names_.end()) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return Polynomial::variable(names_.size(), static_cast<std::size_t>(it - names_.begin()));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
    return ExpressionParser(text, names).parse();
}

FreeBasisProblem parse_free_basis_problem(std::istream& in, const std::string& name) {
    std::optional<Field> field;
    std::vector<GradedVariable> vars;
    std::vector<std::pair<std::string, std::string>> gens;
    std::vector<std::string> basis_text;
    std::optional<std::int64_t> bound;
    std::vector<int> gen_lines, basis_lines;

    std::string raw;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError(name + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string keyword;
        ls >> keyword;
        std::string rest;
        std::getline(ls, rest);
        rest = trim(rest);
        if (keyword == "field") {
            try {
                field = Field::parse(rest);
            } catch (const ParseError& e) {
                fail(e.what());
            }
        } else if (keyword == "var") {
            std::istringstream vs(rest);
            GradedVariable v;
            std::string extra;
            if (!(vs >> v.name >> v.degree) || (vs >> extra) || v.degree <= 0)
                fail("expected 'var <name> <positive degree>'");
            vars.push_back(v);
        } else if (keyword == "gen") {
            const auto eq = rest.find('=');
            if (eq == std::string::npos || trim(rest.substr(0, eq)).empty())
                fail("expected 'gen <name> = <expression>'");
            gens.emplace_back(trim(rest.substr(0, eq)), rest.substr(eq + 1));
            gen_lines.push_back(lineno);
        } else if (keyword == "basis") {
            if (rest.empty())
                fail("expected 'basis <expression>'");
            basis_text.push_back(rest);
            basis_lines.push_back(lineno);
        } else if (keyword == "bound") {
            try {
                std::size_t used = 0;
                bound = std::stoll(rest, &used);
                if (used != rest.size() || *bound < 0)
                    throw std::invalid_argument("bound");
            } catch (const std::exception&) {
                fail("expected 'bound <nonnegative integer>'");
            }
        } else {
            fail("unknown keyword '" + keyword + "'");
        }
    }
    lineno = 0;
    if (!field)
        fail("missing 'field' line");
    if (vars.empty())
        fail("no variables declared");
    if (gens.empty())
        fail("no subring generators declared");
    if (basis_text.empty())
        fail("no basis elements declared");

    GradedAlgebra ambient = [&] {
        try {
            return GradedAlgebra(*field, vars);
        } catch (const std::invalid_argument& e) {
            throw ParseError(name + ": " + e.what());
        }
    }();
    const auto names = ambient.names();
    auto parse_at_line = [&](const std::string& text) {
        try {
            return parse_polynomial(text, names);
        } catch (const ParseError& e) {
            throw ParseError(name + ":" + std::to_string(lineno) + ": " + e.what());
        }
    };
    SubringSpec subring;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        lineno = gen_lines[i];
        Polynomial f = parse_at_line(gens[i].second);
        std::int64_t deg = 0;
        try {
            deg = ambient.degree_of(f);
        } catch (const InhomogeneousInput& e) {
            throw InhomogeneousInput(name + ":" + std::to_string(lineno) + ": " + e.what());
        }
        subring.generators.push_back(SubringGenerator{gens[i].first, std::move(f), deg});
    }
    std::vector<Polynomial> basis;
    for (std::size_t i = 0; i < basis_text.size(); ++i) {
        lineno = basis_lines[i];
        basis.push_back(parse_at_line(basis_text[i]));
    }
    const std::int64_t degree_bound = bound ? *bound : default_certificate_bound(subring);
    return FreeBasisProblem{name, std::move(ambient), std::move(subring), std::move(basis), degree_bound};
}

FreeBasisProblem parse_free_basis_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return parse_free_basis_problem(in, path);
}

}  // namespace mfd
