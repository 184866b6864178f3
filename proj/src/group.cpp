#include "ppbase/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "ppbase/numeric.hpp"
#include "ppbase/table.hpp"

namespace ppbase {

namespace {

// Deterministic Schreier-Sims: base points are the smallest moved points, all
// orbits are BFS in point order, Schreier generators are processed in a fixed
// order. No randomization anywhere.
struct Chain {
    unsigned degree = 0;
    std::vector<unsigned> base;
    std::vector<Permutation> strong_gens;
    // per level: orbit in BFS order, position map, transversal u with
    // base^u = point.
    struct Level {
        std::vector<unsigned> orbit;
        std::vector<int> pos;                  // point -> orbit index, -1 absent
        std::vector<Permutation> transversal;  // parallel to orbit
    };
    std::vector<Level> levels;

    std::vector<Permutation> gens_at(std::size_t k) const {
        std::vector<Permutation> out;
        for (const auto& g : strong_gens) {
            bool fixes = true;
            for (std::size_t j = 0; j < k; ++j)
                if (g(base[j]) != base[j]) {
                    fixes = false;
                    break;
                }
            if (fixes) out.push_back(g);
        }
        return out;
    }

    void recompute_orbit(std::size_t k) {
        auto gens = gens_at(k);
        Level& L = levels[k];
        L.orbit.clear();
        L.pos.assign(degree, -1);
        L.transversal.clear();
        L.orbit.push_back(base[k]);
        L.pos[base[k]] = 0;
        L.transversal.push_back(Permutation::identity(degree));
        for (std::size_t qi = 0; qi < L.orbit.size(); ++qi) {
            unsigned p = L.orbit[qi];
            for (const auto& g : gens) {
                unsigned q = g(p);
                if (L.pos[q] < 0) {
                    L.pos[q] = static_cast<int>(L.orbit.size());
                    L.orbit.push_back(q);
                    L.transversal.push_back(L.transversal[qi] * g);
                }
            }
        }
    }

    std::pair<Permutation, std::size_t> sift_from(Permutation g, std::size_t from) const {
        for (std::size_t k = from; k < base.size(); ++k) {
            unsigned p = g(base[k]);
            if (p == base[k]) continue;
            if (levels[k].pos[p] < 0) return {std::move(g), k};
            g = g * levels[k].transversal[static_cast<std::size_t>(levels[k].pos[p])].inverse();
        }
        return {std::move(g), base.size()};
    }

    std::pair<Permutation, std::size_t> sift(Permutation g) const { return sift_from(std::move(g), 0); }

    // Registers g as a strong generator, opening a new base point when g fixes
    // every existing one.
    void push_strong(const Permutation& g) {
        bool fixes_all = true;
        for (unsigned b : base)
            if (g(b) != b) {
                fixes_all = false;
                break;
            }
        if (fixes_all) {
            base.push_back(g.first_moved_point());
            levels.emplace_back();
        }
        strong_gens.push_back(g);
    }

    // Bottom-up verification sweep. On entry all strong generators are
    // registered; on exit every level's Schreier generators sift to the
    // identity, which certifies the chain.
    void sweep() {
        if (base.empty()) return;
        std::ptrdiff_t i = static_cast<std::ptrdiff_t>(base.size()) - 1;
        while (i >= 0) {
            std::size_t k = static_cast<std::size_t>(i);
            recompute_orbit(k);
            auto gens = gens_at(k);
            bool restart = false;
            for (std::size_t qi = 0; qi < levels[k].orbit.size() && !restart; ++qi) {
                for (const auto& h : gens) {
                    unsigned p = levels[k].orbit[qi];
                    unsigned q = h(p);
                    Permutation s = levels[k].transversal[qi] * h *
                                    levels[k].transversal[static_cast<std::size_t>(levels[k].pos[q])].inverse();
                    if (s.is_identity()) continue;
                    auto [res, lvl] = sift_from(std::move(s), k + 1);
                    if (res.is_identity()) continue;
                    push_strong(res);
                    // Deeper levels than lvl are untouched by the new
                    // generator; everything from lvl up is revisited.
                    i = static_cast<std::ptrdiff_t>(std::min(lvl, base.size() - 1));
                    restart = true;
                    break;
                }
            }
            if (!restart) --i;
        }
    }

    std::uint64_t order() const {
        std::uint64_t o = 1;
        for (const auto& L : levels) o = checked_mul(o, L.orbit.size());
        return o;
    }
};

Chain build_chain(unsigned degree, const std::vector<Permutation>& gens) {
    Chain c;
    c.degree = degree;
    for (const auto& g : gens)
        if (!g.is_identity()) c.push_strong(g);
    c.sweep();
    for (const auto& g : gens)
        if (!c.sift(g).first.is_identity()) throw Error("stabilizer chain verification failed");
    return c;
}

void enumerate_rec(const Chain& c, std::size_t k, const Permutation& acc,
                   std::vector<Permutation>& out) {
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    // Every element factors as u_{t-1} * ... * u_0 over the right-coset
    // transversals, deepest level first.
    for (const auto& u : c.levels[k - 1].transversal) enumerate_rec(c, k - 1, acc * u, out);
}

}  // namespace

namespace detail {

struct GroupImpl {
    unsigned degree = 0;
    std::vector<Permutation> gens;

    mutable std::once_flag chain_once;
    mutable std::shared_ptr<const Chain> chain;

    mutable std::mutex table_mutex;
    mutable std::shared_ptr<const GroupTable> table;

    mutable std::mutex aux_mutex;
    mutable std::map<std::string, std::shared_ptr<const void>> aux;

    const Chain& get_chain() const {
        std::call_once(chain_once, [this] { chain = std::make_shared<Chain>(build_chain(degree, gens)); });
        return *chain;
    }
};

}  // namespace detail

PermGroup::PermGroup() : PermGroup(0, {}) {}

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> generators) {
    auto impl = std::make_shared<detail::GroupImpl>();
    impl->degree = degree;
    for (auto& g : generators) {
        if (g.degree() != degree) throw Error("generator degree mismatch");
        if (!g.is_identity()) impl->gens.push_back(std::move(g));
    }
    impl_ = std::move(impl);
}

PermGroup PermGroup::trivial(unsigned degree) { return PermGroup(degree, {}); }

unsigned PermGroup::degree() const { return impl_->degree; }
const std::vector<Permutation>& PermGroup::generators() const { return impl_->gens; }

std::uint64_t PermGroup::order() const { return impl_->get_chain().order(); }

bool PermGroup::contains(const Permutation& g) const {
    if (g.degree() != degree()) throw Error("degree mismatch in contains()");
    return impl_->get_chain().sift(g).first.is_identity();
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
    if (order() > cap)
        throw CapExceeded("order " + std::to_string(order()) + " exceeds cap " + std::to_string(cap));
    const Chain& c = impl_->get_chain();
    std::vector<Permutation> out;
    out.reserve(order());
    enumerate_rec(c, c.levels.size(), Permutation::identity(degree()), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::shared_ptr<const GroupTable> PermGroup::table(std::uint64_t cap) const {
    {
        std::lock_guard<std::mutex> lk(impl_->table_mutex);
        if (impl_->table) return impl_->table;
    }
    if (order() > cap)
        throw CapExceeded("order " + std::to_string(order()) + " exceeds table cap " +
                          std::to_string(cap));
    auto t = GroupTable::build(elements(cap), impl_->gens);
    std::lock_guard<std::mutex> lk(impl_->table_mutex);
    if (!impl_->table) impl_->table = std::move(t);
    return impl_->table;
}

bool PermGroup::contains_subgroup(const PermGroup& other) const {
    if (other.degree() != degree()) return false;
    for (const auto& g : other.generators())
        if (!contains(g)) return false;
    return true;
}

bool PermGroup::same_group_as(const PermGroup& other) const {
    return order() == other.order() && contains_subgroup(other);
}

bool PermGroup::is_normal_in(const PermGroup& ambient) const {
    for (const auto& g : ambient.generators())
        for (const auto& n : generators())
            if (!contains(n.conjugated_by(g))) return false;
    return true;
}

std::shared_ptr<const void> PermGroup::aux_cached(const std::string& key) const {
    std::lock_guard<std::mutex> lk(impl_->aux_mutex);
    auto it = impl_->aux.find(key);
    return it == impl_->aux.end() ? nullptr : it->second;
}

void PermGroup::aux_store(const std::string& key, std::shared_ptr<const void> value) const {
    std::lock_guard<std::mutex> lk(impl_->aux_mutex);
    impl_->aux.emplace(key, std::move(value));
}

bool PermGroup::is_abelian() const {
    const auto& gs = generators();
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j)
            if (!(gs[i] * gs[j] == gs[j] * gs[i])) return false;
    return true;
}

PermGroup build_group(unsigned degree, std::vector<Permutation> gens) {
    return PermGroup(degree, std::move(gens));
}

PermGroup closure(unsigned degree, const std::vector<Permutation>& seeds) {
    return PermGroup(degree, seeds);
}

PermGroup closure(const PermGroup& ambient, const std::vector<Permutation>& seeds) {
    return closure(ambient.degree(), seeds);
}

PermGroup normal_closure(const PermGroup& G, const std::vector<Permutation>& seeds) {
    for (const auto& s : seeds)
        if (!G.contains(s)) throw Error("normal_closure: seed not in the group");
    std::vector<Permutation> gens;
    for (const auto& s : seeds)
        if (!s.is_identity()) gens.push_back(s);
    PermGroup H(G.degree(), gens);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Permutation> add;
        for (const auto& n : gens)
            for (const auto& g : G.generators()) {
                Permutation c = n.conjugated_by(g);
                if (!H.contains(c)) add.push_back(c);
            }
        if (!add.empty()) {
            for (auto& a : add) gens.push_back(std::move(a));
            H = PermGroup(G.degree(), gens);
            grew = true;
        }
    }
    return H;
}

std::vector<std::pair<Permutation, std::uint64_t>> conjugacy_classes(const PermGroup& G,
                                                                     std::uint64_t cap) {
    if (G.order() > cap)
        throw CapExceeded("conjugacy_classes: order exceeds cap " + std::to_string(cap));
    auto T = G.table(std::max(cap, PermGroup::kTableCap));
    std::vector<std::pair<Permutation, std::uint64_t>> out;
    for (std::size_t c = 0; c < T->class_reps().size(); ++c)
        out.emplace_back(T->perm(T->class_reps()[c]), T->class_members()[c].size());
    return out;
}

// ---- Homomorphisms ----

namespace detail {

struct HomImpl {
    PermGroup source, target;
    std::vector<Permutation> gen_images;
    virtual Permutation apply(const Permutation& g) const = 0;
    virtual ~HomImpl() = default;
};

namespace {

// Dense map source-element -> target permutation, built by BFS over the
// source table; detects ill-defined generator images.
struct DenseHom final : HomImpl {
    std::shared_ptr<const GroupTable> stab;
    std::vector<Permutation> img;  // per source element index

    Permutation apply(const Permutation& g) const override { return img[stab->index_of(g)]; }
};

// Right-coset action of the source on cosets of a subgroup.
struct CosetHom final : HomImpl {
    std::shared_ptr<const GroupTable> stab;
    std::vector<unsigned> coset_of;  // element index -> coset id
    std::vector<EIdx> reps;          // coset id -> least element index
    unsigned index = 0;

    Permutation apply(const Permutation& g) const override {
        EIdx gi = stab->index_of(g);
        std::vector<unsigned> im(index);
        for (unsigned c = 0; c < index; ++c) im[c] = coset_of[stab->mul(reps[c], gi)];
        return Permutation(std::move(im));
    }
};

}  // namespace
}  // namespace detail

Homomorphism::Homomorphism(std::shared_ptr<const detail::HomImpl> impl) : impl_(std::move(impl)) {}

Homomorphism::Homomorphism(PermGroup source, PermGroup target, std::vector<Permutation> gen_images,
                           std::uint64_t cap) {
    if (gen_images.size() != source.generators().size())
        throw Error("homomorphism: one image per source generator required");
    auto impl = std::make_shared<detail::DenseHom>();
    impl->stab = source.table(cap);
    const GroupTable& T = *impl->stab;
    const std::size_t n = T.size();
    impl->img.assign(n, Permutation());
    std::vector<bool> known(n, false);
    impl->img[0] = Permutation::identity(target.degree());
    known[0] = true;
    std::vector<EIdx> queue{0};
    const auto& gidx = T.gen_indices();
    while (!queue.empty()) {
        EIdx x = queue.back();
        queue.pop_back();
        for (std::size_t i = 0; i < gidx.size(); ++i) {
            EIdx y = T.mul(x, gidx[i]);
            Permutation v = impl->img[x] * gen_images[i];
            if (!known[y]) {
                impl->img[y] = std::move(v);
                known[y] = true;
                queue.push_back(y);
            } else if (!(impl->img[y] == v)) {
                throw Error("generator images do not define a homomorphism");
            }
        }
    }
    for (const auto& p : impl->img)
        if (!target.contains(p)) throw Error("homomorphism image leaves the stated target");
    impl->source = std::move(source);
    impl->target = std::move(target);
    impl->gen_images = std::move(gen_images);
    impl_ = std::move(impl);
}

const PermGroup& Homomorphism::source() const { return impl_->source; }
const PermGroup& Homomorphism::target() const { return impl_->target; }
const std::vector<Permutation>& Homomorphism::gen_images() const { return impl_->gen_images; }

Permutation Homomorphism::apply(const Permutation& g) const {
    if (!impl_->source.contains(g)) throw Error("homomorphism applied outside its source");
    return impl_->apply(g);
}

PermGroup Homomorphism::kernel() const {
    auto T = impl_->source.table(PermGroup::kElementsCap);
    std::vector<Permutation> ker;
    for (std::size_t i = 0; i < T->size(); ++i)
        if (impl_->apply(T->perm(static_cast<EIdx>(i))).is_identity())
            ker.push_back(T->perm(static_cast<EIdx>(i)));
    // Reduce to a small generating set.
    PermGroup K(impl_->source.degree(), {});
    std::vector<Permutation> gens;
    for (const auto& p : ker)
        if (!K.contains(p)) {
            gens.push_back(p);
            K = PermGroup(impl_->source.degree(), gens);
        }
    return K;
}

PermGroup Homomorphism::image() const {
    return PermGroup(impl_->target.degree(), impl_->gen_images);
}

Homomorphism coset_action(const PermGroup& G, const PermGroup& M, std::uint64_t cap) {
    if (!G.contains_subgroup(M)) throw Error("coset_action: M is not a subgroup of G");
    auto impl = std::make_shared<detail::CosetHom>();
    impl->stab = G.table(cap);
    const GroupTable& T = *impl->stab;
    TSub Ms = subgroup_from_group(T, M);
    const std::size_t n = T.size();
    impl->coset_of.assign(n, 0);
    std::vector<bool> assigned(n, false);
    for (std::size_t t = 0; t < n; ++t) {
        if (assigned[t]) continue;
        unsigned cid = static_cast<unsigned>(impl->reps.size());
        impl->reps.push_back(static_cast<EIdx>(t));
        for (EIdx m : Ms.elems) {
            EIdx u = T.mul(m, static_cast<EIdx>(t));
            assigned[u] = true;
            impl->coset_of[u] = cid;
        }
    }
    impl->index = static_cast<unsigned>(impl->reps.size());

    std::vector<Permutation> images;
    for (const auto& g : G.generators()) {
        EIdx gi = T.index_of(g);
        std::vector<unsigned> im(impl->index);
        for (unsigned c = 0; c < impl->index; ++c) im[c] = impl->coset_of[T.mul(impl->reps[c], gi)];
        images.push_back(Permutation(std::move(im)));
    }
    impl->source = G;
    impl->target = PermGroup(impl->index, images);
    impl->gen_images = std::move(images);
    return Homomorphism(std::move(impl));
}

namespace detail {
namespace {

struct IdentityHom final : HomImpl {
    Permutation apply(const Permutation& g) const override { return g; }
};

}  // namespace
}  // namespace detail

std::pair<PermGroup, Homomorphism> quotient(const PermGroup& G, const PermGroup& N,
                                            std::uint64_t cap) {
    if (!G.contains_subgroup(N)) throw Error("quotient: N is not a subgroup of G");
    if (!N.is_normal_in(G)) throw Error("quotient: N is not normal in G");
    if (N.is_trivial()) {
        auto impl = std::make_shared<detail::IdentityHom>();
        impl->source = G;
        impl->target = G;
        impl->gen_images = G.generators();
        return {G, Homomorphism(std::move(impl))};
    }
    Homomorphism h = coset_action(G, N, cap);
    PermGroup Q = h.image();
    if (checked_mul(Q.order(), N.order()) != G.order())
        throw Error("quotient: coset action kernel is not N (engine bug)");
    return {Q, h};
}

}  // namespace ppbase
