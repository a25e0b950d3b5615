#include "gradedres/instance.hpp"

#include <cctype>
#include <sstream>

#include "gradedres/koszul.hpp"

namespace gradedres {

namespace {

class LineCursor {
   public:
    LineCursor(std::string_view text, int line) : text_(text), line_(line) {}

    [[noreturn]] void fail(const std::string& message) const {
        std::ostringstream os;
        os << "line " << line_ << ", column " << (pos_ + 1) << ": " << message;
        throw algebra_error(os.str());
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    std::string word() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    long integer() {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start || !std::isdigit(static_cast<unsigned char>(text_[pos_ - 1])))
            fail("expected an integer");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    /// Text up to the next top-level occurrence of any stop character
    /// (brackets and parentheses nest).
    std::string until(std::string_view stops) {
        skip_space();
        int depth = 0;
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (depth == 0 && stops.find(c) != std::string_view::npos) break;
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') --depth;
            ++pos_;
        }
        std::size_t end = pos_;
        while (end > start && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
        if (end == start) fail("expected an expression");
        return std::string(text_.substr(start, end - start));
    }

    Polynomial poly(const PolyRingPtr& ring, std::string_view stops) {
        std::size_t start = pos_;
        std::string text = until(stops);
        try {
            return parse_polynomial(ring, text);
        } catch (const algebra_error& e) {
            pos_ = start;
            fail(e.what());
        }
    }

   private:
    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

std::vector<int> parse_int_list(LineCursor& cur) {
    std::vector<int> out;
    cur.expect('[');
    if (!cur.accept(']')) {
        do {
            out.push_back(static_cast<int>(cur.integer()));
        } while (cur.accept(','));
        cur.expect(']');
    }
    return out;
}

void parse_ring_line(LineCursor& cur, ProblemInstance& inst) {
    if (inst.ring) cur.fail("ring already defined");
    cur.word();  // ring name; kept for readability of files only
    cur.expect('=');
    Field field = Field::rationals();
    if (cur.peek() == 'F') {
        cur.expect('F');
        cur.expect('(');
        long p = cur.integer();
        cur.expect(')');
        field = Field::prime(p);
    } else if (cur.peek() == 'Q') {
        cur.expect('Q');
    } else {
        cur.fail("expected F(<p>) or Q");
    }
    cur.expect('[');
    std::vector<std::string> vars;
    do {
        vars.push_back(cur.word());
    } while (cur.accept(','));
    cur.expect(']');
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    inst.ring = std::make_shared<GradedRing>(make_poly_ring(field, std::move(vars)));
}

void parse_quotient_line(LineCursor& cur, ProblemInstance& inst) {
    if (!inst.ring) cur.fail("quotient before ring");
    if (inst.ring->is_quotient()) cur.fail("quotient already defined");
    if (!inst.modules.empty() || !inst.koszul_complexes.empty() ||
        !inst.resolve_complexes.empty())
        cur.fail("quotient must precede module and complex definitions");
    cur.expect('(');
    std::vector<Polynomial> gens;
    do {
        gens.push_back(cur.poly(inst.ring->poly(), ",)"));
    } while (cur.accept(','));
    cur.expect(')');
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    inst.ring = std::make_shared<GradedRing>(inst.ring->poly(), std::move(gens));
}

void parse_module_line(LineCursor& cur, ProblemInstance& inst,
                       std::vector<std::string>& module_order) {
    if (!inst.ring) cur.fail("module before ring");
    std::string name = cur.word();
    if (inst.modules.count(name)) cur.fail("module name already used");
    cur.expect('=');
    std::string kw = cur.word();
    if (kw != "coker") cur.fail("expected coker");
    cur.expect('[');
    std::vector<std::vector<Polynomial>> rows;
    do {
        cur.expect('[');
        std::vector<Polynomial> row;
        do {
            row.push_back(cur.poly(inst.ring->poly(), ",]"));
        } while (cur.accept(','));
        cur.expect(']');
        if (!rows.empty() && row.size() != rows.front().size())
            cur.fail("matrix rows have different lengths");
        rows.push_back(std::move(row));
    } while (cur.accept(','));
    cur.expect(']');

    const int nrows = static_cast<int>(rows.size());
    const int ncols = static_cast<int>(rows.front().size());
    std::vector<int> target(nrows, 0), source;
    bool explicit_twists = false;
    if (!cur.at_end()) {
        std::string tw = cur.word();
        if (tw != "twists") cur.fail("expected twists");
        if (cur.word() != "target") cur.fail("expected target");
        target = parse_int_list(cur);
        if (cur.word() != "source") cur.fail("expected source");
        source = parse_int_list(cur);
        explicit_twists = true;
        if (!cur.at_end()) cur.fail("unexpected trailing input");
        if (static_cast<int>(target.size()) != nrows ||
            static_cast<int>(source.size()) != ncols)
            cur.fail("twist lists do not match the matrix shape");
    }
    if (!explicit_twists) {
        // infer each column twist from its first nonzero entry
        source.assign(ncols, 0);
        for (int j = 0; j < ncols; ++j)
            for (int i = 0; i < nrows; ++i)
                if (!rows[i][j].is_zero()) {
                    auto d = rows[i][j].homogeneous_degree();
                    if (!d) cur.fail("matrix entry is not homogeneous");
                    source[j] = *d + target[i];
                    break;
                }
    }
    GradedMap map(inst.ring, GradedFreeModule{std::move(source)},
                  GradedFreeModule{std::move(target)}, std::move(rows));
    module_order.push_back(name);
    inst.modules.emplace(std::move(name), ModulePresentation(inst.ring, std::move(map)));
}

void parse_complex_line(LineCursor& cur, ProblemInstance& inst) {
    if (!inst.ring) cur.fail("complex before ring");
    std::string name = cur.word();
    if (inst.koszul_complexes.count(name) || inst.resolve_complexes.count(name))
        cur.fail("complex name already used");
    cur.expect('=');
    std::string kw = cur.word();
    if (kw == "koszul") {
        cur.expect('(');
        std::vector<Polynomial> elems;
        do {
            elems.push_back(cur.poly(inst.ring->poly(), ",)"));
        } while (cur.accept(','));
        cur.expect(')');
        if (!cur.at_end()) cur.fail("unexpected trailing input");
        inst.koszul_complexes.emplace(std::move(name),
                                      koszul_complex(inst.ring, elems));
    } else if (kw == "resolve") {
        cur.expect('(');
        std::string module = cur.word();
        cur.expect(')');
        if (!cur.at_end()) cur.fail("unexpected trailing input");
        if (!inst.modules.count(module)) cur.fail("unknown module " + module);
        inst.resolve_complexes.emplace(std::move(name), std::move(module));
    } else {
        cur.fail("expected koszul(...) or resolve(...)");
    }
}

void parse_check_line(LineCursor& cur, ProblemInstance& inst, int line) {
    CheckRequest req;
    req.line = line;
    req.kind = cur.word();
    if (req.kind != "beh" && req.kind != "binomial" && req.kind != "psi2" &&
        req.kind != "equality" && req.kind != "dutta")
        cur.fail("unknown check kind " + req.kind);
    if (cur.word() != "on") cur.fail("expected on");
    req.target = cur.word();
    while (!cur.at_end()) {
        std::string key = cur.word();
        cur.expect('=');
        long value = cur.integer();
        if (key == "emax")
            req.emax = static_cast<int>(value);
        else if (key == "cap")
            req.cap = static_cast<int>(value);
        else
            cur.fail("unknown option " + key);
    }
    bool is_module = inst.modules.count(req.target) > 0;
    bool is_complex = inst.koszul_complexes.count(req.target) > 0 ||
                      inst.resolve_complexes.count(req.target) > 0;
    if (!is_module && !is_complex) cur.fail("unknown name " + req.target);
    if (req.kind == "psi2" && !is_complex)
        cur.fail("psi2 needs a complex, not a module");
    if ((req.kind == "beh" || req.kind == "binomial" || req.kind == "equality") &&
        !is_module)
        cur.fail(req.kind + " needs a module, not a complex");
    inst.checks.push_back(std::move(req));
}

}  // namespace

ProblemInstance parse_instance(const std::string& text) {
    ProblemInstance inst;
    std::vector<std::string> module_order;
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    bool any_check = false;
    while (std::getline(stream, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        LineCursor cur(raw, line_no);
        if (cur.at_end()) continue;
        std::string head = cur.word();
        if (head == "ring") {
            parse_ring_line(cur, inst);
        } else if (head == "quotient") {
            parse_quotient_line(cur, inst);
        } else if (head == "module") {
            parse_module_line(cur, inst, module_order);
        } else if (head == "complex") {
            parse_complex_line(cur, inst);
        } else if (head == "check") {
            parse_check_line(cur, inst, line_no);
            any_check = true;
        } else {
            cur.fail("unknown directive " + head);
        }
    }
    if (!inst.ring) throw algebra_error("instance defines no ring");
    if (!any_check)
        for (const std::string& name : module_order)
            for (const char* kind : {"beh", "binomial", "equality"})
                inst.checks.push_back({kind, name, std::nullopt, std::nullopt, 0});
    return inst;
}

}  // namespace gradedres
