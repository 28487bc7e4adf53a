#pragma once

#include "nichols/ncgb.hpp"

#include <cctype>
#include <string>

namespace nichols {

/// Recursive-descent parser for the expression syntax used in case files and
/// expected-output blocks. Grammar (whitespace-insensitive):
///
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := primary ['^' integer]
///   primary := '(' expr ')' | integer ['/' integer] | atom
///   atom    := x1 | x2 | x12 | x112 | x122 | x221 | x11112   (root vectors)
///            | g1 | g2                                       (group generators)
///            | q11 | q12 | q21 | q22                         (braiding entries)
///            | z<n>                                          (primitive n-th root)
///            | br(expr, expr)                                (braided commutator)
///            | <name>                                        (lambda symbol)
///
/// Every value is a SmashPoly over the given context; scalars are multiples
/// of the identity. Powers are expanded freely, so keep exponents small --
/// high-power relations are stored as (base, power) pairs in case files.
class ExprParser {
public:
    ExprParser(const std::string& src, const SmashCtx& ctx) : src_(src), ctx_(ctx) {}

    SmashPoly parse()
    {
        SmashPoly p = expr();
        skip_ws();
        if (pos_ != src_.size())
            throw AlgebraError("trailing input in expression at '" + rest() + "'");
        return p;
    }

private:
    const std::string& src_;
    const SmashCtx& ctx_;
    std::size_t pos_ = 0;

    std::string rest() const { return src_.substr(pos_, 24); }

    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek()
    {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    long integer()
    {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw AlgebraError("expected integer at '" + rest() + "'");
        long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            v = v * 10 + (src_[pos_++] - '0');
        return neg ? -v : v;
    }

    SmashPoly scalar(const Coef& c)
    {
        SmashPoly p = ctx_.zero();
        smash_add_term(p, {Word{}, grp_id(ctx_.real.group_orders)}, c, ctx_);
        return p;
    }

    SmashPoly expr()
    {
        SmashPoly acc;
        bool neg = eat('-');
        acc = term();
        if (neg)
            acc = smash_sub(ctx_.zero(), acc, ctx_);
        for (;;) {
            if (eat('+'))
                acc = smash_add(acc, term(), ctx_);
            else if (eat('-'))
                acc = smash_sub(acc, term(), ctx_);
            else
                return acc;
        }
    }

    SmashPoly term()
    {
        SmashPoly acc = factor();
        while (eat('*'))
            acc = smash_mul(acc, factor(), ctx_);
        return acc;
    }

    SmashPoly factor()
    {
        SmashPoly base = primary();
        if (eat('^')) {
            long e = integer();
            if (e < 0)
                throw AlgebraError("negative exponents not supported");
            SmashPoly p = ctx_.one();
            for (long i = 0; i < e; ++i)
                p = smash_mul(p, base, ctx_);
            return p;
        }
        return base;
    }

    SmashPoly primary()
    {
        skip_ws();
        if (eat('(')) {
            SmashPoly p = expr();
            if (!eat(')'))
                throw AlgebraError("expected ')' at '" + rest() + "'");
            return p;
        }
        if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            long num = integer();
            if (eat('/')) {
                long den = integer();
                return scalar(Coef(CycNum(num) / CycNum(den)));
            }
            return scalar(Coef(CycNum(num)));
        }
        return atom();
    }

    SmashPoly atom()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        std::string name = src_.substr(start, pos_ - start);
        if (name.empty())
            throw AlgebraError("expected atom at '" + rest() + "'");

        if (name == "br") {
            if (!eat('('))
                throw AlgebraError("expected '(' after br");
            SmashPoly u = expr();
            if (!eat(','))
                throw AlgebraError("expected ',' in br(,)");
            SmashPoly v = expr();
            if (!eat(')'))
                throw AlgebraError("expected ')' closing br(,)");
            return smash_commutator(u, v);
        }
        if (name == "x1")
            return ctx_.embed(ctx_.bc.fc.gen(0));
        if (name == "x2")
            return ctx_.embed(ctx_.bc.fc.gen(1));
        if (name == "x12" || name == "x112" || name == "x122" || name == "x221" ||
            name == "x11112")
            return ctx_.embed(root_vector(name.substr(1), ctx_.bc));
        if (name == "g1")
            return ctx_.grp({1, 0});
        if (name == "g2")
            return ctx_.grp({0, 1});
        if (name.size() == 3 && name[0] == 'q' &&
            (name[1] == '1' || name[1] == '2') && (name[2] == '1' || name[2] == '2'))
            return scalar(Coef(ctx_.bc.braiding.q[name[1] - '1'][name[2] - '1']));
        if (name[0] == 'z' && name.size() > 1 &&
            std::all_of(name.begin() + 1, name.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            unsigned n = static_cast<unsigned>(std::stoul(name.substr(1)));
            return scalar(Coef(CycNum::root(n, 1)));
        }
        int idx = ctx_.bc.fc.lambdas.index_of(name);
        if (idx < 0)
            throw AlgebraError("unknown symbol '" + name + "' in expression");
        return scalar(Coef::symbol(static_cast<unsigned>(idx)));
    }

    /// [u, v]_c on skew-primitive-spanned homogeneous u, v: u v - chi-twist v u,
    /// with the twist read off the multidegrees of the x-parts.
    SmashPoly smash_commutator(const SmashPoly& u, const SmashPoly& v)
    {
        NCPoly un = nc_of_smash(u, ctx_);
        NCPoly vn = nc_of_smash(v, ctx_);
        return ctx_.embed(braided_commutator(un, vn, ctx_.bc));
    }
};

/// Parses an expression over the smash algebra (may contain group elements,
/// braiding scalars, and lambda symbols of the context's ring).
inline SmashPoly parse_expr(const std::string& src, const SmashCtx& ctx)
{
    return ExprParser(src, ctx).parse();
}

/// Parses a relation: a pure tensor-algebra element (no group part, no
/// lambda symbols allowed).
inline NCPoly parse_relation(const std::string& src, const SmashCtx& ctx)
{
    SmashPoly p = parse_expr(src, ctx);
    for (const auto& [k, c] : p)
        if (!c.is_constant())
            throw AlgebraError("relation expression must be lambda-free: " + src);
    return nc_of_smash(p, ctx);
}

} // namespace nichols
