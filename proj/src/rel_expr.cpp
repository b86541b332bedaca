#include "nichols/rel_expr.hpp"

#include "nichols/errors.hpp"

#include <cctype>
#include <sstream>

namespace nichols {

namespace {

struct Token {
    enum class Type { Int, Ident, Punct, End };
    Type type;
    std::string text;
    std::size_t position;
};

std::vector<Token> tokenize(const std::string& s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = s[i];
        if (std::isspace(c)) {
            ++i;
        } else if (std::isdigit(c)) {
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            out.push_back({Token::Type::Int, s.substr(start, i - start), start});
        } else if (std::isalpha(c)) {
            std::size_t start = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Token::Type::Ident, s.substr(start, i - start), start});
        } else if (std::string("()[],;+-*/^").find(static_cast<char>(c)) != std::string::npos) {
            out.push_back({Token::Type::Punct, std::string(1, static_cast<char>(c)), i});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", i);
        }
    }
    out.push_back({Token::Type::End, "", s.size()});
    return out;
}

using NodePtr = std::shared_ptr<RelNode>;

NodePtr make(RelNode::Kind kind, std::size_t pos)
{
    auto n = std::make_shared<RelNode>();
    n->kind = kind;
    n->position = pos;
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    NodePtr parse_all()
    {
        if (peek().type == Token::Type::End)
            throw ParseError("empty expression", peek().position);
        NodePtr e = expr();
        if (peek().type != Token::Type::End)
            throw ParseError("unexpected '" + peek().text + "'", peek().position);
        return e;
    }

private:
    const Token& peek(std::size_t ahead = 0) const
    {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    bool is_punct(const std::string& p, std::size_t ahead = 0) const
    {
        return peek(ahead).type == Token::Type::Punct && peek(ahead).text == p;
    }
    Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    void expect(const std::string& p)
    {
        if (!is_punct(p)) {
            const Token& t = peek();
            throw ParseError("expected '" + p + "' but found " +
                                 (t.type == Token::Type::End ? std::string("end of input") : "'" + t.text + "'"),
                             t.position);
        }
        ++pos_;
    }
    int integer()
    {
        if (peek().type != Token::Type::Int)
            throw ParseError("expected an integer", peek().position);
        Token t = take();
        if (t.text.size() > 9)
            throw ParseError("integer too large", t.position);
        return std::stoi(t.text);
    }
    long signed_integer()
    {
        bool negative = false;
        if (is_punct("-")) {
            negative = true;
            ++pos_;
        }
        long v = integer();
        return negative ? -v : v;
    }

    bool starts_factor() const
    {
        const Token& t = peek();
        if (t.type == Token::Type::Int || t.type == Token::Type::Ident)
            return true;
        return is_punct("(") || is_punct("[");
    }

    NodePtr expr()
    {
        NodePtr left = term();
        while (is_punct("+") || is_punct("-")) {
            Token op = take();
            NodePtr n = make(op.text == "+" ? RelNode::Kind::Sum : RelNode::Kind::Difference, op.position);
            n->children = {left, term()};
            left = n;
        }
        return left;
    }

    NodePtr term()
    {
        if (is_punct("-")) {
            Token op = take();
            NodePtr n = make(RelNode::Kind::Negate, op.position);
            n->children = {term()};
            return n;
        }
        NodePtr left = power();
        for (;;) {
            if (is_punct("*")) {
                Token op = take();
                NodePtr n = make(RelNode::Kind::Product, op.position);
                n->children = {left, power()};
                left = n;
            } else if (is_punct("/")) {
                Token op = take();
                NodePtr n = make(RelNode::Kind::Quotient, op.position);
                n->children = {left, power()};
                left = n;
            } else if (starts_factor()) {
                std::size_t at = peek().position;
                NodePtr n = make(RelNode::Kind::Product, at);
                n->children = {left, power()};
                left = n;
            } else {
                return left;
            }
        }
    }

    NodePtr power()
    {
        NodePtr base = factor();
        while (is_punct("^")) {
            Token op = take();
            NodePtr n = make(RelNode::Kind::Power, op.position);
            n->exponent = signed_integer();
            n->children = {base};
            base = n;
        }
        return base;
    }

    std::vector<int> index_list()
    {
        std::vector<int> idx{integer()};
        while (is_punct(",")) {
            ++pos_;
            idx.push_back(integer());
        }
        return idx;
    }

    NodePtr factor()
    {
        const Token& t = peek();
        if (t.type == Token::Type::Int) {
            Token num = take();
            NodePtr n = make(RelNode::Kind::Number, num.position);
            n->number = num.text;
            return n;
        }
        if (is_punct("(")) {
            ++pos_;
            NodePtr e = expr();
            expect(")");
            return e;
        }
        if (is_punct("[")) {
            Token open = take();
            NodePtr n = make(RelNode::Kind::Commutator, open.position);
            NodePtr a = expr();
            expect(",");
            NodePtr b = expr();
            expect("]");
            n->children = {a, b};
            return n;
        }
        if (t.type != Token::Type::Ident)
            throw ParseError(t.type == Token::Type::End ? "unexpected end of input" : "unexpected '" + t.text + "'",
                             t.position);
        Token id = take();
        if (id.text == "x" && is_punct("(")) {
            ++pos_;
            std::vector<int> idx = index_list();
            expect(")");
            NodePtr n = make(idx.size() == 1 ? RelNode::Kind::Generator : RelNode::Kind::Iterated, id.position);
            n->indices = std::move(idx);
            return n;
        }
        if (id.text == "ad" && is_punct("(")) {
            ++pos_;
            NodePtr n = make(RelNode::Kind::AdPower, id.position);
            n->indices = {integer()};
            expect(";");
            n->children = {expr()};
            expect(")");
            if (is_punct("^")) {
                ++pos_;
                n->exponent = integer();
            }
            return n;
        }
        if (id.text == "q_" && is_punct("(")) {
            ++pos_;
            NodePtr n = make(RelNode::Kind::Entry, id.position);
            n->indices = {integer()};
            expect(",");
            n->indices.push_back(integer());
            expect(")");
            return n;
        }
        NodePtr n = make(id.text == "z" ? RelNode::Kind::Zeta : RelNode::Kind::Param, id.position);
        n->name = id.text;
        return n;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

const char* kind_name(RelNode::Kind k)
{
    switch (k) {
    case RelNode::Kind::Generator: return "generator";
    case RelNode::Kind::Iterated: return "iterated";
    case RelNode::Kind::Commutator: return "commutator";
    case RelNode::Kind::AdPower: return "ad";
    case RelNode::Kind::Power: return "power";
    case RelNode::Kind::Product: return "product";
    case RelNode::Kind::Quotient: return "quotient";
    case RelNode::Kind::Sum: return "sum";
    case RelNode::Kind::Difference: return "difference";
    case RelNode::Kind::Negate: return "negate";
    case RelNode::Kind::Number: return "number";
    case RelNode::Kind::Zeta: return "zeta";
    case RelNode::Kind::Param: return "name";
    case RelNode::Kind::Entry: return "entry";
    }
    return "?";
}

std::string join_indices(const std::vector<int>& idx)
{
    std::string s;
    for (std::size_t k = 0; k < idx.size(); ++k)
        s += (k ? "," : "") + std::to_string(idx[k]);
    return s;
}

void dump_node(const RelNode& n, int depth, std::ostringstream& out)
{
    out << std::string(2 * depth, ' ') << kind_name(n.kind);
    switch (n.kind) {
    case RelNode::Kind::Generator:
    case RelNode::Kind::Iterated: out << " x(" << join_indices(n.indices) << ")"; break;
    case RelNode::Kind::AdPower: out << " i=" << n.indices[0] << " n=" << n.exponent; break;
    case RelNode::Kind::Power: out << " n=" << n.exponent; break;
    case RelNode::Kind::Number: out << " " << n.number; break;
    case RelNode::Kind::Param: out << " " << n.name; break;
    case RelNode::Kind::Entry: out << " q(" << join_indices(n.indices) << ")"; break;
    default: break;
    }
    out << "\n";
    for (const auto& c : n.children)
        dump_node(*c, depth + 1, out);
}

int precedence(const RelNode& n)
{
    switch (n.kind) {
    case RelNode::Kind::Sum:
    case RelNode::Kind::Difference: return 1;
    case RelNode::Kind::Negate: return 2;
    case RelNode::Kind::Product:
    case RelNode::Kind::Quotient: return 3;
    case RelNode::Kind::Power: return 4;
    default: return 5;
    }
}

std::string text_of(const RelNode& n);

std::string wrapped(const RelNode& n, int min_prec)
{
    std::string s = text_of(n);
    return precedence(n) < min_prec ? "(" + s + ")" : s;
}

std::string text_of(const RelNode& n)
{
    using K = RelNode::Kind;
    switch (n.kind) {
    case K::Generator:
    case K::Iterated: return "x(" + join_indices(n.indices) + ")";
    case K::Commutator: return "[" + text_of(*n.children[0]) + ", " + text_of(*n.children[1]) + "]";
    case K::AdPower: {
        std::string s = "ad(" + std::to_string(n.indices[0]) + "; " + text_of(*n.children[0]) + ")";
        return n.exponent == 1 ? s : s + "^" + std::to_string(n.exponent);
    }
    case K::Power: {
        const RelNode& base = *n.children[0];
        std::string b = base.kind == K::AdPower ? "(" + text_of(base) + ")" : wrapped(base, 5);
        return b + "^" + std::to_string(n.exponent);
    }
    case K::Product: return wrapped(*n.children[0], 3) + "*" + wrapped(*n.children[1], 4);
    case K::Quotient: return wrapped(*n.children[0], 3) + "/" + wrapped(*n.children[1], 4);
    case K::Sum: return text_of(*n.children[0]) + " + " + wrapped(*n.children[1], 2);
    case K::Difference: return text_of(*n.children[0]) + " - " + wrapped(*n.children[1], 2);
    case K::Negate: return "-" + wrapped(*n.children[0], 3);
    case K::Number: return n.number;
    case K::Zeta: return "z";
    case K::Param: return n.name;
    case K::Entry: return "q_(" + join_indices(n.indices) + ")";
    }
    return "?";
}

std::shared_ptr<const RelNode> relabel_node(const RelNode& n, int offset,
                                            const std::map<std::string, std::string>& rename)
{
    auto r = std::make_shared<RelNode>(n);
    using K = RelNode::Kind;
    if (n.kind == K::Generator || n.kind == K::Iterated || n.kind == K::AdPower || n.kind == K::Entry)
        for (auto& i : r->indices)
            i += offset;
    if (n.kind == K::Param) {
        auto it = rename.find(n.name);
        if (it != rename.end())
            r->name = it->second;
    }
    for (auto& c : r->children)
        c = relabel_node(*c, offset, rename);
    return r;
}

class Evaluator {
public:
    explicit Evaluator(const EvalContext& ctx) : ctx_(ctx) {}

    FreeElement eval(const RelNode& n) const
    {
        using K = RelNode::Kind;
        switch (n.kind) {
        case K::Generator: return FreeElement::generator(ctx_.rank, vertex(n.indices[0], n.position));
        case K::Iterated: {
            const auto& q = braiding(n.position);
            FreeElement r = FreeElement::generator(ctx_.rank, vertex(n.indices.back(), n.position));
            for (auto it = n.indices.rbegin() + 1; it != n.indices.rend(); ++it)
                r = braided_commutator(q, FreeElement::generator(ctx_.rank, vertex(*it, n.position)), r);
            return r;
        }
        case K::Commutator: {
            FreeElement a = homogeneous(*n.children[0]);
            FreeElement b = homogeneous(*n.children[1]);
            return braided_commutator(braiding(n.position), a, b);
        }
        case K::AdPower: {
            FreeElement v = homogeneous(*n.children[0]);
            return ad_power(braiding(n.position), vertex(n.indices[0], n.position), v, static_cast<int>(n.exponent));
        }
        case K::Power: {
            FreeElement base = homogeneous(*n.children[0]);
            if (n.exponent >= 0)
                return power(base, static_cast<int>(n.exponent));
            auto s = as_scalar(base, n.position);
            return scalar(s.pow(n.exponent));
        }
        case K::Product: return homogeneous(*n.children[0]) * homogeneous(*n.children[1]);
        case K::Quotient: {
            FreeElement num = homogeneous(*n.children[0]);
            Scalar den = as_scalar(homogeneous(*n.children[1]), n.children[1]->position);
            if (den.is_zero())
                throw InvalidOperand("division by zero at offset " + std::to_string(n.position));
            return den.inverse() * num;
        }
        case K::Sum:
        case K::Difference: {
            FreeElement a = homogeneous(*n.children[0]);
            FreeElement b = homogeneous(*n.children[1]);
            FreeElement r = n.kind == K::Sum ? a + b : a - b;
            auto da = a.degree();
            auto db = b.degree();
            if (da && db && *da != *db)
                throw NonHomogeneous("sum of degrees " + da->to_string() + " and " + db->to_string() +
                                     " at offset " + std::to_string(n.position));
            return r;
        }
        case K::Negate: return -homogeneous(*n.children[0]);
        case K::Number: return scalar(Scalar::rational(1, mpq_class(mpz_class(n.number))));
        case K::Zeta: return scalar(Scalar::zeta(ctx_.field.M));
        case K::Param: {
            if (n.name == ctx_.field.transcendental)
                return scalar(Scalar::transcendental(ctx_.field.M));
            auto it = ctx_.params.find(n.name);
            if (it == ctx_.params.end())
                throw ParseError("unknown name '" + n.name + "'", n.position);
            return scalar(it->second);
        }
        case K::Entry: {
            const auto& q = braiding(n.position);
            return scalar(q(vertex(n.indices[0], n.position), vertex(n.indices[1], n.position)));
        }
        }
        throw std::logic_error("unhandled expression node");
    }

    FreeElement homogeneous(const RelNode& n) const
    {
        FreeElement e = eval(n);
        if (!e.is_homogeneous())
            throw NonHomogeneous("non-homogeneous operand at offset " + std::to_string(n.position));
        return e;
    }

    FreeElement scalar(const Scalar& s) const
    {
        return FreeElement::word(ctx_.rank, {}, s);
    }

    static Scalar as_scalar(const FreeElement& e, std::size_t pos)
    {
        if (e.is_zero())
            return Scalar::zero(1);
        if (e.size() != 1 || !e.terms().begin()->first.empty())
            throw NonHomogeneous("expected a scalar at offset " + std::to_string(pos));
        return e.terms().begin()->second;
    }

private:
    int vertex(int one_based, std::size_t pos) const
    {
        if (one_based < 1 || one_based > ctx_.rank)
            throw std::out_of_range("index " + std::to_string(one_based) + " out of range 1.." +
                                    std::to_string(ctx_.rank) + " at offset " + std::to_string(pos));
        return one_based - 1;
    }
    const BraidingMatrix& braiding(std::size_t pos) const
    {
        if (!ctx_.braiding)
            throw ParseError("braiding needed but none is available", pos);
        return *ctx_.braiding;
    }

    const EvalContext& ctx_;
};

} // namespace

std::string RelExpr::dump() const
{
    std::ostringstream out;
    if (root_)
        dump_node(*root_, 0, out);
    return out.str();
}

std::string RelExpr::to_text() const
{
    return root_ ? text_of(*root_) : std::string();
}

RelExpr relabel(const RelExpr& e, int offset, const std::map<std::string, std::string>& rename)
{
    if (e.empty())
        return e;
    auto root = relabel_node(e.root(), offset, rename);
    return RelExpr(text_of(*root), root);
}

RelExpr parse_rel_expr(const std::string& text)
{
    Parser p(text);
    return RelExpr(text, p.parse_all());
}

FreeElement eval_rel_expr(const RelExpr& e, const EvalContext& ctx)
{
    if (e.empty())
        throw std::invalid_argument("empty expression");
    Evaluator ev(ctx);
    return ev.homogeneous(e.root());
}

FreeElement eval_rel_expr(const std::string& text, const EvalContext& ctx)
{
    return eval_rel_expr(parse_rel_expr(text), ctx);
}

Scalar parse_scalar(const std::string& text, const EvalContext& ctx)
{
    RelExpr e = parse_rel_expr(text);
    Evaluator ev(ctx);
    FreeElement v = ev.eval(e.root());
    return Evaluator::as_scalar(v, 0);
}

} // namespace nichols
