// Canonical labeling of configurations: equitable partition refinement with
// individualization on the Levi graph (points and lines kept on separate sides).
//
// The search tree is explored depth-first. The certificate of a leaf is the
// incidence structure written in leaf order; the smallest certificate wins.
// Two pruning rules, both standard:
//   * a leaf whose certificate equals the first leaf's yields an automorphism
//     mapping the first path onto the current one, so the whole subtree below
//     the divergence point is an image of an explored one and is abandoned;
//   * at nodes on the first path, children in the same orbit (under automorphisms
//     found so far that fix the path prefix) as an explored child are skipped.

#include <nkconf/matroid.hpp>

#include <algorithm>
#include <climits>
#include <numeric>

namespace nkconf {

namespace {

struct Partition {
    std::vector<int> order;    // vertex at each position
    std::vector<int> position; // position of each vertex
    std::vector<int> cell_of;  // start position of the cell holding each vertex
    std::vector<int> cell_end; // indexed by cell start: one past the last position

    int size() const { return static_cast<int>(order.size()); }
    bool discrete() const
    {
        for (int s = 0; s < size(); s = cell_end[s])
            if (cell_end[s] - s > 1)
                return false;
        return true;
    }
};

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), explored_(n, false) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (b < a)
            std::swap(a, b);
        parent_[b] = a;
        explored_[a] = explored_[a] || explored_[b];
    }

    bool explored(int x) { return explored_[find(x)]; }
    void mark_explored(int x) { explored_[find(x)] = true; }

private:
    std::vector<int> parent_;
    std::vector<bool> explored_;
};

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Configuration& c) : c_(c), graph_(levi_graph(c)), n_(c.n()), v_count_(2 * c.n()) {}

    CanonicalForm run()
    {
        Partition root;
        root.order.resize(v_count_);
        std::iota(root.order.begin(), root.order.end(), 0);
        root.position = root.order;
        root.cell_of.assign(v_count_, 0);
        root.cell_end.assign(v_count_, 0);
        for (int v = n_; v < v_count_; ++v)
            root.cell_of[v] = n_;
        root.cell_end[0] = n_;
        root.cell_end[n_] = v_count_;
        refine(root, {0, n_});
        search(root, 0, true);

        CanonicalForm form;
        form.labeling.resize(n_);
        for (int p = 0; p < n_; ++p)
            form.labeling[p] = best_order_position_[p];
        std::vector<std::vector<int>> lines;
        for (int j = 0; j < n_; ++j)
            lines.emplace_back(best_cert_.begin() + static_cast<std::ptrdiff_t>(j) * c_.k(),
                               best_cert_.begin() + static_cast<std::ptrdiff_t>(j + 1) * c_.k());
        std::sort(lines.begin(), lines.end());
        std::vector<std::uint8_t> bytes{static_cast<std::uint8_t>(n_), static_cast<std::uint8_t>(c_.k())};
        for (const auto& line : lines)
            for (int p : line)
                bytes.push_back(static_cast<std::uint8_t>(p));
        form.code = CanonicalCode(std::move(bytes));
        form.leaves = leaves_;
        return form;
    }

private:
    static constexpr int kNoJump = INT_MAX;

    void refine(Partition& part, std::vector<int> queue) const
    {
        std::vector<bool> queued(v_count_, false);
        for (int s : queue)
            queued[s] = true;
        std::vector<int> count(v_count_);
        std::size_t head = 0;
        while (head < queue.size()) {
            const int splitter = queue[head++];
            queued[splitter] = false;
            std::fill(count.begin(), count.end(), 0);
            for (int pos = splitter; pos < part.cell_end[splitter]; ++pos)
                for (int w : graph_.adjacency[part.order[pos]])
                    ++count[w];

            for (int start = 0; start < v_count_;) {
                const int end = part.cell_end[start];
                if (end - start > 1) {
                    const int first = count[part.order[start]];
                    bool uniform = true;
                    for (int pos = start + 1; pos < end && uniform; ++pos)
                        uniform = count[part.order[pos]] == first;
                    if (!uniform)
                        split_cell(part, start, end, count, queue, queued);
                }
                start = end;
            }
        }
    }

    void split_cell(Partition& part, int start, int end, const std::vector<int>& count, std::vector<int>& queue,
                    std::vector<bool>& queued) const
    {
        auto first = part.order.begin() + start;
        auto last = part.order.begin() + end;
        std::sort(first, last, [&](int a, int b) { return count[a] != count[b] ? count[a] < count[b] : a < b; });
        int fragment = start;
        for (int pos = start; pos < end; ++pos) {
            const int v = part.order[pos];
            part.position[v] = pos;
            if (pos > start && count[v] != count[part.order[pos - 1]]) {
                part.cell_end[fragment] = pos;
                fragment = pos;
            }
            part.cell_of[v] = fragment;
        }
        part.cell_end[fragment] = end;
        for (int s = start; s < end; s = part.cell_end[s])
            if (!queued[s]) {
                queued[s] = true;
                queue.push_back(s);
            }
    }

    void individualize(Partition& part, int v) const
    {
        const int start = part.cell_of[v];
        const int end = part.cell_end[start];
        const int other = part.order[start];
        std::swap(part.order[start], part.order[part.position[v]]);
        part.position[other] = part.position[v];
        part.position[v] = start;
        part.cell_end[start] = start + 1;
        part.cell_end[start + 1] = end;
        for (int pos = start + 1; pos < end; ++pos)
            part.cell_of[part.order[pos]] = start + 1;
        refine(part, {start});
    }

    std::vector<int> certificate(const Partition& part) const
    {
        std::vector<int> cert;
        cert.reserve(static_cast<std::size_t>(n_) * c_.k());
        for (int j = 0; j < n_; ++j) {
            std::vector<int> labels;
            for (int p : graph_.adjacency[part.order[n_ + j]])
                labels.push_back(part.position[p]);
            std::sort(labels.begin(), labels.end());
            cert.insert(cert.end(), labels.begin(), labels.end());
        }
        return cert;
    }

    void record_automorphism(const std::vector<int>& from_order, const std::vector<int>& to_order)
    {
        std::vector<int> gamma(v_count_);
        for (int pos = 0; pos < v_count_; ++pos)
            gamma[from_order[pos]] = to_order[pos];
        for (std::size_t level = 0; level < orbits_.size(); ++level) {
            if (level > 0 && gamma[first_path_[level - 1]] != first_path_[level - 1])
                break;
            for (int v = 0; v < v_count_; ++v)
                orbits_[level].unite(v, gamma[v]);
        }
    }

    // depth: number of individualized vertices. agree: length of the common prefix with the first path.
    int search(const Partition& part, int depth, bool on_first_path)
    {
        if (part.discrete()) {
            ++leaves_;
            std::vector<int> cert = certificate(part);
            if (!have_first_) {
                have_first_ = true;
                first_cert_ = cert;
                first_order_ = part.order;
                best_cert_ = std::move(cert);
                best_order_ = part.order;
                best_order_position_ = part.position;
                return kNoJump;
            }
            if (cert == first_cert_) {
                record_automorphism(first_order_, part.order);
                return divergence_;
            }
            if (cert < best_cert_) {
                best_cert_ = std::move(cert);
                best_order_ = part.order;
                best_order_position_ = part.position;
            }
            else if (cert == best_cert_) {
                record_automorphism(best_order_, part.order);
            }
            return kNoJump;
        }

        int target = 0;
        while (part.cell_end[target] - target == 1)
            target = part.cell_end[target];
        std::vector<int> cell(part.order.begin() + target, part.order.begin() + part.cell_end[target]);
        std::sort(cell.begin(), cell.end());

        if (on_first_path) {
            orbits_.emplace_back(v_count_);
        }

        for (std::size_t i = 0; i < cell.size(); ++i) {
            const int w = cell[i];
            const bool first_child = on_first_path && i == 0 && static_cast<int>(first_path_.size()) == depth;
            if (on_first_path) {
                UnionFind& uf = orbits_[depth];
                if (uf.explored(w))
                    continue;
                uf.mark_explored(w);
                if (first_child)
                    first_path_.push_back(w);
            }
            Partition child = part;
            individualize(child, w);
            if (!first_child && on_first_path)
                divergence_ = depth;
            const int jump = search(child, depth + 1, first_child);
            if (jump < depth)
                return jump;
        }
        return kNoJump;
    }

    const Configuration& c_;
    LeviGraph graph_;
    int n_;
    int v_count_;

    bool have_first_ = false;
    std::vector<int> first_path_;
    std::vector<UnionFind> orbits_;
    int divergence_ = 0;
    std::vector<int> first_cert_, first_order_;
    std::vector<int> best_cert_, best_order_, best_order_position_;
    std::int64_t leaves_ = 0;
};

} // namespace

std::string CanonicalCode::hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (std::uint8_t b : bytes_) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

CanonicalCode CanonicalCode::from_hex(std::string_view hex)
{
    auto nibble = [](char ch) -> int {
        if (ch >= '0' && ch <= '9')
            return ch - '0';
        if (ch >= 'a' && ch <= 'f')
            return ch - 'a' + 10;
        throw std::invalid_argument("CanonicalCode::from_hex: bad digit");
    };
    if (hex.size() % 2 != 0)
        throw std::invalid_argument("CanonicalCode::from_hex: odd length");
    std::vector<std::uint8_t> bytes;
    for (std::size_t i = 0; i < hex.size(); i += 2)
        bytes.push_back(static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
    return CanonicalCode(std::move(bytes));
}

CanonicalForm canonical_form(const Configuration& c)
{
    return CanonicalSearch(c).run();
}

CanonicalCode canonical_code(const Configuration& c)
{
    return canonical_form(c).code;
}

bool is_isomorphism(const Configuration& a, const Configuration& b, std::span<const int> perm)
{
    if (a.n() != b.n() || a.k() != b.k() || !is_permutation_of(perm, a.n()))
        return false;
    return relabel(a, perm) == b;
}

IsomorphismResult are_isomorphic(const Configuration& a, const Configuration& b)
{
    if (a.n() != b.n() || a.k() != b.k())
        return {};
    const CanonicalForm fa = canonical_form(a);
    const CanonicalForm fb = canonical_form(b);
    if (fa.code != fb.code)
        return {};
    std::vector<int> from_label(b.n());
    for (int p = 0; p < b.n(); ++p)
        from_label[fb.labeling[p]] = p;
    std::vector<int> sigma(a.n());
    for (int p = 0; p < a.n(); ++p)
        sigma[p] = from_label[fa.labeling[p]];
    if (!is_isomorphism(a, b, sigma))
        throw std::logic_error("are_isomorphic: canonical labelings produced an invalid witness");
    return {true, std::move(sigma)};
}

PoincarePolynomial poincare_polynomial(std::int64_t n, std::int64_t k)
{
    const std::int64_t all_pairs = binomial(n, 2);
    const std::int64_t covered_pairs = n * binomial(k, 2);
    if (all_pairs < covered_pairs)
        throw std::invalid_argument("poincare_polynomial: C(n,2) < n C(k,2); not a general-position configuration");
    return {1, n, n * (k - 1) + (all_pairs - covered_pairs)};
}

PoincarePolynomial poincare_polynomial(const Configuration& c)
{
    return poincare_polynomial(c.n(), c.k());
}

std::string to_string(const PoincarePolynomial& p)
{
    return std::to_string(p.b0) + " + " + std::to_string(p.b1) + "t + " + std::to_string(p.b2) + "t^2";
}

} // namespace nkconf
