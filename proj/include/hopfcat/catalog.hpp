#pragma once

#include <algorithm>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "hopfcat/group.hpp"
#include "hopfcat/io.hpp"
#include "hopfcat/smash.hpp"

namespace hopfcat {

struct CatalogObject {
    std::string name;
    GroupTable table;
    HopfPtr algebra;
};

/// A catalog morphism is always the linearization k[phi] of a group
/// homomorphism; element_images keeps phi itself so tests can cross-check
/// Hopf-level constructions against the group-level picture.
struct CatalogMorphism {
    std::string name;
    size_t dom, cod;
    std::vector<size_t> element_images;
    Morphism morphism;
};

struct CatalogSplitEpi {
    std::string name;
    size_t total, base;
    std::vector<size_t> kernel_elements;
    PointedObject po;
};

struct CatalogAction {
    std::string name;
    Action action;
};

/// The bundled test surface: group algebras of all groups of order <= 8
/// (including the nonabelian D4 and Q8), every subgroup inclusion, every
/// quotient projection, every split epimorphism with every group-theoretic
/// section, and a handful of module-algebra actions.
class Catalog {
public:
    static Catalog builtin() { return Catalog(builtin_tables()); }

    /// Builds the same derived pools from group tables stored as JSON files
    /// (one {"order","identity","table"} object per file).
    static Catalog from_directory(const std::filesystem::path& dir) {
        std::vector<std::filesystem::path> files;
        for (const auto& e : std::filesystem::directory_iterator(dir))
            if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        if (files.empty()) throw SchemaError("catalog directory has no .json group tables: " + dir.string());
        std::vector<GroupTable> tables;
        for (const auto& f : files)
            tables.push_back(io::group_table_from_json(io::load_json_file(f), f.string(), f.stem().string()));
        return Catalog(std::move(tables));
    }

    static std::vector<GroupTable> builtin_tables() {
        const GroupTable c2 = cyclic_group(2);
        const GroupTable c4 = cyclic_group(4);
        const GroupTable v4 = direct_product(c2, c2, "c2c2");
        std::vector<GroupTable> tables;
        for (size_t n = 1; n <= 8; ++n) tables.push_back(cyclic_group(n));
        tables.push_back(v4);
        tables.push_back(symmetric3());
        tables.push_back(direct_product(c4, c2, "c4c2"));
        tables.push_back(direct_product(v4, c2, "c2c2c2"));
        tables.push_back(dihedral_group(4));
        tables.push_back(quaternion_group());
        return tables;
    }

    const std::vector<CatalogObject>& objects() const { return objects_; }
    const std::vector<CatalogMorphism>& morphisms() const { return morphisms_; }
    const std::vector<CatalogSplitEpi>& split_epis() const { return split_epis_; }
    const std::vector<CatalogAction>& actions() const { return actions_; }
    size_t zero_object_index() const { return zero_index_; }

    const CatalogObject& object(const std::string& name) const {
        for (const auto& o : objects_)
            if (o.name == name) return o;
        throw PreconditionError("no catalog object named " + name);
    }

    /// Index of a catalog object isomorphic to t, with the isomorphism from
    /// the catalog table to t.
    std::optional<std::pair<size_t, std::vector<size_t>>> find_isomorphic(const GroupTable& t) const {
        for (size_t i = 0; i < objects_.size(); ++i) {
            if (objects_[i].table.order() != t.order()) continue;
            if (auto iso = find_group_isomorphism(objects_[i].table, t)) return {{i, *iso}};
        }
        return std::nullopt;
    }

private:
    explicit Catalog(std::vector<GroupTable> tables) {
        std::sort(tables.begin(), tables.end(), [](const GroupTable& a, const GroupTable& b) {
            return a.order() != b.order() ? a.order() < b.order() : a.name() < b.name();
        });
        const bool has_trivial = !tables.empty() && tables.front().order() == 1;
        if (!has_trivial) tables.insert(tables.begin(), cyclic_group(1));
        for (auto& t : tables) {
            const std::string name = t.name();
            HopfPtr algebra = group_algebra(t);
            objects_.push_back({name, std::move(t), std::move(algebra)});
        }
        zero_index_ = 0;  // sorted by order, and an order-1 table is present
        build_morphisms();
        build_split_epis();
        build_actions();
    }

    static std::string element_list_name(const std::vector<size_t>& elements) {
        std::string out;
        for (size_t e : elements) {
            if (!out.empty()) out += '.';
            out += std::to_string(e);
        }
        return out;
    }

    void add_morphism(std::string name, size_t dom, size_t cod, std::vector<size_t> images) {
        Morphism m = group_hom_morphism(objects_[dom].algebra, objects_[cod].algebra, images);
        for (const auto& existing : morphisms_)
            if (existing.dom == dom && existing.cod == cod && existing.morphism.matrix() == m.matrix())
                return;
        morphisms_.push_back({std::move(name), dom, cod, std::move(images), std::move(m)});
    }

    void build_morphisms() {
        for (size_t gi = 0; gi < objects_.size(); ++gi) {
            const GroupTable& g = objects_[gi].table;
            std::vector<size_t> id_images(g.order());
            for (size_t x = 0; x < g.order(); ++x) id_images[x] = x;
            add_morphism("id:" + g.name(), gi, gi, std::move(id_images));
            add_morphism("eps:" + g.name(), gi, zero_index_,
                         std::vector<size_t>(g.order(), objects_[zero_index_].table.identity()));
            add_morphism("eta:" + g.name(), zero_index_, gi, {g.identity()});
            for (const auto& sub : subgroups(g)) {
                const GroupTable sub_table = subgroup_table(g, sub);
                const auto canonical = find_isomorphic(sub_table);
                if (!canonical) throw InvariantError("subgroup has no catalog-isomorphic model");
                std::vector<size_t> images(sub.size());
                for (size_t j = 0; j < sub.size(); ++j) images[j] = sub[canonical->second[j]];
                add_morphism("incl:" + g.name() + ":" + element_list_name(sub), canonical->first, gi,
                             std::move(images));
                if (!is_normal_subgroup(g, sub)) continue;
                const QuotientGroup q = quotient_group(g, sub);
                const auto qcanonical = find_isomorphic(q.table);
                if (!qcanonical) throw InvariantError("quotient has no catalog-isomorphic model");
                std::vector<size_t> to_canonical(q.table.order());
                for (size_t j = 0; j < q.table.order(); ++j) to_canonical[qcanonical->second[j]] = j;
                std::vector<size_t> qimages(g.order());
                for (size_t x = 0; x < g.order(); ++x) qimages[x] = to_canonical[q.coset_of[x]];
                add_morphism("quot:" + g.name() + ":" + element_list_name(sub), gi, qcanonical->first,
                             std::move(qimages));
            }
        }
    }

    void build_split_epis() {
        for (size_t gi = 0; gi < objects_.size(); ++gi) {
            const GroupTable& g = objects_[gi].table;
            for (const auto& sub : subgroups(g)) {
                if (!is_normal_subgroup(g, sub)) continue;
                const QuotientGroup q = quotient_group(g, sub);
                const auto qcanonical = find_isomorphic(q.table);
                if (!qcanonical) throw InvariantError("quotient has no catalog-isomorphic model");
                const size_t base = qcanonical->first;
                const auto& canon_to_q = qcanonical->second;  // base table index -> q index
                std::vector<size_t> to_canonical(q.table.order());
                for (size_t j = 0; j < q.table.order(); ++j) to_canonical[canon_to_q[j]] = j;
                std::vector<size_t> pimages(g.order());
                for (size_t x = 0; x < g.order(); ++x) pimages[x] = to_canonical[q.coset_of[x]];
                const Morphism p =
                    group_hom_morphism(objects_[gi].algebra, objects_[base].algebra, pimages);
                size_t ordinal = 0;
                for (const auto& section : quotient_sections(g, q)) {
                    std::vector<size_t> simages(q.table.order());
                    for (size_t j = 0; j < q.table.order(); ++j) simages[j] = section[canon_to_q[j]];
                    const Morphism s =
                        group_hom_morphism(objects_[base].algebra, objects_[gi].algebra, simages);
                    split_epis_.push_back({"split:" + g.name() + ":" + element_list_name(sub) + "#" +
                                               std::to_string(ordinal++),
                                           gi, base, sub, PointedObject(p, s)});
                }
            }
        }
    }

    /// The order-reversing action of c2 on a cyclic group plus a few trivial
    /// actions; conjugation actions arise from the split epimorphisms.
    void build_actions() {
        const auto object_index = [&](const std::string& name) {
            for (size_t i = 0; i < objects_.size(); ++i)
                if (objects_[i].name == name) return i;
            return objects_.size();
        };
        const size_t c2 = object_index("c2");
        if (c2 < objects_.size()) {
            for (const char* target : {"c3", "c4", "c5"}) {
                const size_t k = object_index(target);
                if (k == objects_.size()) continue;
                const size_t nk = objects_[k].algebra->dim();
                Matrix m(nk, 2 * nk);
                for (size_t a = 0; a < nk; ++a) {
                    m(a, 0 * nk + a) = 1;
                    m((nk - a) % nk, 1 * nk + a) = 1;
                }
                actions_.push_back({std::string("inversion:") + target,
                                    Action(objects_[c2].algebra, objects_[k].algebra, std::move(m))});
            }
        }
        const std::vector<std::pair<std::string, std::string>> trivial_pairs = {
            {"c2", "c3"}, {"c3", "c2"}, {"c2", "s3"}, {"s3", "c2"}};
        for (const auto& [yname, kname] : trivial_pairs) {
            const size_t y = object_index(yname), k = object_index(kname);
            if (y == objects_.size() || k == objects_.size()) continue;
            actions_.push_back({"trivial:" + yname + ":" + kname,
                                trivial_action(objects_[y].algebra, objects_[k].algebra)});
        }
    }

    std::vector<CatalogObject> objects_;
    std::vector<CatalogMorphism> morphisms_;
    std::vector<CatalogSplitEpi> split_epis_;
    std::vector<CatalogAction> actions_;
    size_t zero_index_ = 0;
};

}  // namespace hopfcat
