#include "snt/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace snt {

int DiagElem::top_arity() const {
    switch (kind) {
        case Kind::Id: return 1;
        case Kind::Cup:
        case Kind::KCup: return 2;
        default: return 0;
    }
}

namespace {

struct ParseCtx {
    const FusionCategoryData& cat;
    int line_no = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "diagram parse error (line " << line_no << "): " << msg;
        throw std::runtime_error(os.str());
    }

    std::pair<int, bool> parse_label(const std::string& tok) const {
        std::string base = tok;
        bool star = false;
        if (!base.empty() && base.back() == '*') {
            star = true;
            base.pop_back();
        }
        int idx = cat.simple_by_name(base);
        if (idx < 0) fail("unknown label '" + tok + "'");
        return {idx, star};
    }
};

// Element parens like cup(tau) stay glued to their head; tree and coefficient
// parens are standalone tokens.
std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> toks;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            toks.push_back(cur);
            cur.clear();
        }
    };
    for (char c : line) {
        if (c == '#') break;
        if (std::isspace((unsigned char)c) || c == ';') {
            flush();
        } else if (c == '(' && cur.empty()) {
            toks.push_back("(");
        } else if (c == ')' && cur.find('(') == std::string::npos) {
            flush();
            toks.push_back(")");
        } else {
            cur.push_back(c);
        }
    }
    flush();
    return toks;
}

cplx parse_coeff(ParseCtx& ctx, const std::vector<std::string>& t, size_t& i) {
    try {
        if (i < t.size() && t[i] == "(") {
            if (i + 2 >= t.size() || t[i + 2] != ")") ctx.fail("malformed complex coefficient");
            const std::string& body = t[i + 1];
            auto comma = body.find(',');
            if (comma == std::string::npos) ctx.fail("malformed complex coefficient");
            cplx v(std::stod(body.substr(0, comma)), std::stod(body.substr(comma + 1)));
            i += 3;
            return v;
        }
        if (i >= t.size()) ctx.fail("missing coefficient");
        return cplx(std::stod(t[i++]), 0.0);
    } catch (const std::invalid_argument&) {
        ctx.fail("malformed coefficient");
    }
}

Word underlying_top(const DiagElem& e, const FusionCategoryData& cat) {
    switch (e.kind) {
        case DiagElem::Kind::Id:
            return {e.star ? cat.dual[e.label] : e.label};
        case DiagElem::Kind::Cup:
            return e.star ? Word{cat.dual[e.label], e.label} : Word{e.label, cat.dual[e.label]};
        case DiagElem::Kind::KCup:
            return {-1 - e.kirby, -1 - e.kirby};
        default:
            return {};
    }
}

Word underlying_bottom(const DiagElem& e, const FusionCategoryData& cat,
                       const std::map<std::string, CouponDef>& lets) {
    switch (e.kind) {
        case DiagElem::Kind::Id:
            return {e.star ? cat.dual[e.label] : e.label};
        case DiagElem::Kind::Cap:
            return e.star ? Word{cat.dual[e.label], e.label} : Word{e.label, cat.dual[e.label]};
        case DiagElem::Kind::KCap:
            return {-1 - e.kirby, -1 - e.kirby};
        case DiagElem::Kind::Coupon: {
            const Word& w = lets.at(e.name).word;
            Word out;
            for (size_t k = 0; k < w.size(); ++k) out.push_back(w[(k + e.pivot) % w.size()]);
            return out;
        }
        default:
            return {};
    }
}

}  // namespace

PlanarDiagram parse_diagram(const std::string& text, const FusionCategoryData& cat) {
    PlanarDiagram d;
    ParseCtx ctx{cat};
    std::istringstream in(text);
    std::string line;
    Word boundary;
    int next_kirby = 0;
    int slice_index = 0;

    while (std::getline(in, line)) {
        ++ctx.line_no;
        auto t = tokens_of(line);
        if (t.empty()) continue;

        if (t[0] == "let") {
            size_t i = 1;
            if (i >= t.size()) ctx.fail("missing coupon name");
            std::string name = t[i++];
            if (d.lets.count(name)) ctx.fail("duplicate coupon name '" + name + "'");
            if (i >= t.size() || t[i] != ":") ctx.fail("expected ':'");
            ++i;
            if (i >= t.size() || t[i] != "1") ctx.fail("coupon source must be 1");
            ++i;
            if (i >= t.size() || t[i] != "->") ctx.fail("expected '->'");
            ++i;
            Word w;
            std::vector<std::pair<int, bool>> spelled;
            while (i < t.size() && t[i] != "=") {
                auto [lbl, star] = ctx.parse_label(t[i]);
                spelled.push_back({lbl, star});
                w.push_back(star ? cat.dual[lbl] : lbl);
                ++i;
            }
            if (i >= t.size() || t[i] != "=") ctx.fail("expected '='");
            ++i;
            CouponDef def;
            def.word = w;
            def.spelled = spelled;
            auto basis = hom_basis(cat, w);
            if (i < t.size() && t[i] == "basis") {
                ++i;
                if (i >= t.size()) ctx.fail("missing basis index");
                int k = std::stoi(t[i++]);
                if (k < 0 || k >= (int)basis.size()) ctx.fail("basis index out of range");
                def.from_basis = true;
                def.basis_index = k;
                def.value = mv_basis(cat, w, k);
            } else if (i < t.size() && t[i] == "sum") {
                ++i;
                def.value = mv_zero(cat, w);
                while (i < t.size()) {
                    cplx c = parse_coeff(ctx, t, i);
                    if (i >= t.size() || t[i] != "(") ctx.fail("expected '(' starting a tree");
                    ++i;
                    FusionTree tree;
                    while (i < t.size() && t[i] != ")") {
                        int idx = cat.simple_by_name(t[i]);
                        if (idx < 0) ctx.fail("unknown simple '" + t[i] + "' in tree");
                        tree.push_back(idx);
                        ++i;
                    }
                    if (i >= t.size()) ctx.fail("unterminated tree");
                    ++i;
                    auto it = std::find(basis.begin(), basis.end(), tree);
                    if (it == basis.end()) ctx.fail("tree is not admissible for this word");
                    def.terms.push_back({c, tree});
                    def.value.coeff[it - basis.begin()] += c;
                }
            } else {
                ctx.fail("expected 'basis' or 'sum'");
            }
            d.let_order.push_back(name);
            d.lets[name] = std::move(def);
            continue;
        }

        if (t[0] != "slice") ctx.fail("expected 'let' or 'slice'");
        ++slice_index;
        Slice s;
        s.line = ctx.line_no;
        for (size_t i = 1; i < t.size(); ++i) {
            const std::string& tok = t[i];
            DiagElem e;
            auto call = tok.find('(');
            std::string head = tok.substr(0, call);
            std::string arg =
                call == std::string::npos ? "" : tok.substr(call + 1, tok.rfind(')') - call - 1);
            if (head == "id") {
                e.kind = DiagElem::Kind::Id;
                std::tie(e.label, e.star) = ctx.parse_label(arg);
            } else if (head == "cup" || head == "cap") {
                e.kind = head == "cup" ? DiagElem::Kind::Cup : DiagElem::Kind::Cap;
                std::tie(e.label, e.star) = ctx.parse_label(arg);
            } else if (head == "coupon") {
                e.kind = DiagElem::Kind::Coupon;
                auto at = arg.find('@');
                if (at == std::string::npos)
                    ctx.fail("coupon needs an initial half-edge marker: coupon(name@k)");
                e.name = arg.substr(0, at);
                e.pivot = std::stoi(arg.substr(at + 1));
                if (!d.lets.count(e.name)) ctx.fail("dangling coupon reference '" + e.name + "'");
                int n = (int)d.lets[e.name].word.size();
                if (n > 0 && (e.pivot < 0 || e.pivot >= n)) ctx.fail("pivot position out of range");
            } else if (tok == "kcap") {
                e.kind = DiagElem::Kind::KCap;
            } else if (tok == "kcup") {
                e.kind = DiagElem::Kind::KCup;
            } else {
                ctx.fail("unknown slice element '" + tok + "'");
            }
            s.elems.push_back(e);
        }

        // resolve kcup circle ids against the incoming boundary
        {
            int p = 0;
            for (auto& e : s.elems) {
                if (e.kind == DiagElem::Kind::KCup) {
                    bool ok = p + 1 < (int)boundary.size() && boundary[p] < 0 &&
                              boundary[p] == boundary[p + 1];
                    if (!ok) {
                        std::ostringstream os;
                        os << "boundary mismatch at slice " << slice_index
                           << ": kcup must close a matching kirby pair";
                        throw std::runtime_error(os.str());
                    }
                    e.kirby = -1 - boundary[p];
                }
                p += e.top_arity();
            }
        }

        Word top;
        for (auto& e : s.elems)
            for (int x : underlying_top(e, cat)) top.push_back(x);
        if (top != boundary) {
            std::ostringstream os;
            os << "boundary mismatch at slice " << slice_index << " (line " << s.line << ")";
            throw std::runtime_error(os.str());
        }

        Word bottom;
        for (auto& e : s.elems) {
            if (e.kind == DiagElem::Kind::KCap) e.kirby = next_kirby++;
            for (int x : underlying_bottom(e, cat, d.lets)) bottom.push_back(x);
        }
        boundary = bottom;
        d.slices.push_back(std::move(s));
    }
    for (int x : boundary)
        if (x < 0) throw std::runtime_error("diagram leaves a kirby circle open at the bottom");
    d.bottom = boundary;
    d.kirby_circles = next_kirby;
    return d;
}

static std::string coeff_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string print_diagram(const PlanarDiagram& d, const FusionCategoryData& cat) {
    std::ostringstream os;
    auto label_str = [&](int lbl, bool star) { return cat.simples[lbl].name + (star ? "*" : ""); };
    for (const auto& name : d.let_order) {
        const auto& def = d.lets.at(name);
        os << "let " << name << " : 1 ->";
        for (auto [lbl, star] : def.spelled) os << ' ' << label_str(lbl, star);
        os << " = ";
        if (def.from_basis) {
            os << "basis " << def.basis_index;
        } else {
            os << "sum";
            for (const auto& [c, tree] : def.terms) {
                os << " (" << coeff_str(c.real()) << ',' << coeff_str(c.imag()) << ") (";
                for (size_t k = 0; k < tree.size(); ++k)
                    os << (k ? " " : "") << cat.simples[tree[k]].name;
                os << ')';
            }
        }
        os << '\n';
    }
    for (const auto& s : d.slices) {
        os << "slice";
        for (const auto& e : s.elems) {
            os << ' ';
            switch (e.kind) {
                case DiagElem::Kind::Id: os << "id(" << label_str(e.label, e.star) << ')'; break;
                case DiagElem::Kind::Cup: os << "cup(" << label_str(e.label, e.star) << ')'; break;
                case DiagElem::Kind::Cap: os << "cap(" << label_str(e.label, e.star) << ')'; break;
                case DiagElem::Kind::Coupon: os << "coupon(" << e.name << '@' << e.pivot << ')'; break;
                case DiagElem::Kind::KCup: os << "kcup"; break;
                case DiagElem::Kind::KCap: os << "kcap"; break;
            }
        }
        os << ";\n";
    }
    return os.str();
}

DiagramValue evaluate(const PlanarDiagram& d, const FusionCategoryData& cat) {
    const int circles = d.kirby_circles;
    MorphismVector total = mv_zero(cat, d.bottom);
    std::vector<int> assign(circles, 0);

    while (true) {
        double weight = 1.0;
        for (int id = 0; id < circles; ++id) weight *= cat.dim(assign[id]);

        MorphismVector state = mv_unit(cat);
        for (const auto& s : d.slices) {
            std::vector<int> pos(s.elems.size());
            int p = 0;
            for (size_t i = 0; i < s.elems.size(); ++i) {
                pos[i] = p;
                p += s.elems[i].top_arity();
            }
            for (int i = (int)s.elems.size() - 1; i >= 0; --i) {
                const DiagElem& e = s.elems[i];
                switch (e.kind) {
                    case DiagElem::Kind::Id: break;
                    case DiagElem::Kind::Cup:
                        state = apply_cup(cat, state, pos[i], e.star ? Bend::Left : Bend::Right);
                        break;
                    case DiagElem::Kind::Cap: {
                        int first = e.star ? cat.dual[e.label] : e.label;
                        state = graft(cat, state, pos[i],
                                      cap_vector(cat, first, e.star ? Bend::Left : Bend::Right));
                        break;
                    }
                    case DiagElem::Kind::KCap:
                        state = graft(cat, state, pos[i],
                                      cap_vector(cat, assign[e.kirby], Bend::Right));
                        break;
                    case DiagElem::Kind::KCup:
                        state = apply_cup(cat, state, pos[i], Bend::Right);
                        break;
                    case DiagElem::Kind::Coupon:
                        state = graft(cat, state, pos[i],
                                      rotate_by(cat, d.lets.at(e.name).value, e.pivot));
                        break;
                }
            }
        }
        total = mv_add(total, mv_scale(state, weight));

        int k = circles - 1;
        while (k >= 0 && assign[k] == cat.n() - 1) assign[k--] = 0;
        if (k < 0) break;
        ++assign[k];
    }
    return {total};
}

cplx evaluate_closed(const PlanarDiagram& d, const FusionCategoryData& cat) {
    if (!d.bottom.empty()) throw std::runtime_error("diagram has an open boundary");
    return evaluate(d, cat).value.scalar();
}

} // namespace snt
