#include <algorithm>
#include <functional>

#include "eesurf/catalog.hpp"

namespace eesurf {

namespace {

Family family_over(const CatalogLabel& sl) {
    switch (sl.index) {
        case 1: return Family::HC1;
        case 2: return Family::HC2;
        case 3: return Family::HC4;
        case 4: return Family::HQ8;
        case 5: return Family::HC3;
        case 6: return Family::HC6;
        case 7: return Family::HQ12;
        default: return Family::HSL23;
    }
}

struct ElementInfo {
    Mat2 m;
    bool in_sl;
    int order;
    std::optional<EigenClass> eigen;
};

bool symbol_accepts(const Symbol& s, const ElementInfo& e) {
    if (s.is_sl()) return e.in_sl && e.order == s.sl_order;
    if (!e.eigen) return false;
    for (const auto& [a, b] : s.eigen)
        if ((e.eigen->lambda1 == a && e.eigen->lambda2 == b) || (e.eigen->lambda1 == b && e.eigen->lambda2 == a))
            return true;
    return false;
}

std::optional<std::vector<Mat2>> match_entry(const CatalogEntry& entry, const LinearGroup& h,
                                             const std::vector<ElementInfo>& info) {
    std::size_t n = entry.symbols.size();
    std::vector<std::vector<const Mat2*>> cands(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& e : info)
            if (symbol_accepts(entry.symbols[i], e)) cands[i].push_back(&e.m);
        if (cands[i].empty()) return std::nullopt;
    }
    std::vector<Relation> rels = entry.parsed_relations();
    // Each relation is checked once its last symbol is assigned.
    std::vector<std::vector<const Relation*>> due(n);
    for (const auto& r : rels) {
        int last = 0;
        for (const Word* w : {&r.lhs, &r.rhs})
            for (const auto& f : w->factors) last = std::max(last, f.first);
        due[last].push_back(&r);
    }
    std::vector<Mat2> values(n, Mat2::identity(h.ring));
    std::optional<std::vector<Mat2>> found;
    std::function<void(std::size_t)> dfs = [&](std::size_t i) {
        if (found) return;
        if (i == n) {
            if (close_linear(values, h.ring, static_cast<int>(h.size())).size() == h.size()) found = values;
            return;
        }
        for (const Mat2* c : cands[i]) {
            values[i] = *c;
            bool ok = true;
            for (const Relation* r : due[i])
                if (!relation_holds(*r, values, h.ring)) {
                    ok = false;
                    break;
                }
            if (ok) dfs(i + 1);
            if (found) return;
        }
    };
    dfs(0);
    return found;
}

}  // namespace

GlClassification classify_gl(const LinearGroup& h, bool strict) {
    LinearGroup k;
    k.ring = h.ring;
    k.elements = h.sl_part;
    k.sl_part = h.sl_part;
    GlClassification out;
    out.sl_label = classify_sl(k);
    if (h.s == 1) {
        out.label = out.sl_label;
        out.matches = {out.sl_label};
        const CatalogEntry& e = catalog_entry(out.sl_label);
        auto found = match_entry(e, h, [&] {
            std::vector<ElementInfo> info;
            QuadElem one(h.ring, 1);
            for (const Mat2& m : h.elements) info.push_back({m, m.det() == one, element_order(m).value_or(0), {}});
            return info;
        }());
        if (found) {
            out.symbols = e.symbol_names();
            out.assignment = *found;
        }
        return out;
    }
    std::vector<ElementInfo> info;
    QuadElem one(h.ring, 1);
    for (const Mat2& m : h.elements) {
        bool in_sl = m.det() == one;
        info.push_back({m, in_sl, element_order(m).value_or(0), in_sl ? std::nullopt : eigen_classify(m)});
    }
    Family fam = family_over(out.sl_label);
    for (const CatalogEntry& e : catalog_entries()) {
        if (e.label.family != fam || e.order != static_cast<long>(h.size()) || e.s != h.s) continue;
        auto found = match_entry(e, h, info);
        if (!found) continue;
        if (out.matches.empty()) {
            out.label = e.label;
            out.symbols = e.symbol_names();
            out.assignment = *found;
        }
        out.matches.push_back(e.label);
    }
    if (out.matches.empty())
        throw Error(ErrorKind::NotInCatalog, "no catalog entry over " + out.sl_label.str() + " with |H| = " +
                                                 std::to_string(h.size()) + ", s = " + std::to_string(h.s));
    if (strict && out.matches.size() > 1) {
        std::string all;
        for (const auto& m : out.matches) all += (all.empty() ? "" : ", ") + m.str();
        throw Error(ErrorKind::AmbiguousLabel, all);
    }
    return out;
}

}  // namespace eesurf
