#include "revarc/digraph.hpp"

#include <algorithm>
#include <sstream>

namespace revarc {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 1) throw std::invalid_argument("digraph needs at least one vertex");
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& a = arcs_[i];
        if (a.id != static_cast<int>(i)) throw std::invalid_argument("arc ids must be 0..m-1 in order");
        if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
            throw std::invalid_argument("arc endpoint out of range");
        if (a.tail == a.head) throw std::invalid_argument("self-loops are not allowed");
    }
}

const Arc& Digraph::arc(int id) const {
    if (id < 0 || id >= arc_count()) throw std::out_of_range("unknown arc id " + std::to_string(id));
    return arcs_[id];
}

Digraph Digraph::with_arc_reversed(int id) const {
    const Arc& a = arc(id);
    std::vector<Arc> out = arcs_;
    out[id] = Arc{a.id, a.head, a.tail};
    return Digraph(n_, std::move(out));
}

Digraph Digraph::with_set_reversed(const ArcSet& f) const {
    f.validate_against(*this);
    std::vector<Arc> out = arcs_;
    for (int id : f.ids()) out[id] = Arc{id, arcs_[id].head, arcs_[id].tail};
    return Digraph(n_, std::move(out));
}

Digraph Digraph::reversed() const {
    std::vector<Arc> out = arcs_;
    for (Arc& a : out) std::swap(a.tail, a.head);
    return Digraph(n_, std::move(out));
}

Digraph Digraph::restricted_to(const ArcSet& keep) const {
    keep.validate_against(*this);
    std::vector<Arc> out;
    out.reserve(keep.size());
    for (int id : keep.ids()) {
        Arc a = arcs_[id];
        a.id = static_cast<int>(out.size());
        out.push_back(a);
    }
    return Digraph(n_, std::move(out));
}

bool Digraph::operator==(const Digraph& o) const {
    if (n_ != o.n_ || arcs_.size() != o.arcs_.size()) return false;
    for (std::size_t i = 0; i < arcs_.size(); ++i)
        if (arcs_[i].tail != o.arcs_[i].tail || arcs_[i].head != o.arcs_[i].head) return false;
    return true;
}

ArcSet::ArcSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

ArcSet ArcSet::all(const Digraph& d) {
    std::vector<int> ids(d.arc_count());
    for (int i = 0; i < d.arc_count(); ++i) ids[i] = i;
    return ArcSet(std::move(ids));
}

bool ArcSet::contains(int id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

void ArcSet::insert(int id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) ids_.insert(it, id);
}

void ArcSet::erase(int id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it != ids_.end() && *it == id) ids_.erase(it);
}

void ArcSet::validate_against(const Digraph& d) const {
    for (int id : ids_)
        if (id < 0 || id >= d.arc_count())
            throw std::out_of_range("arc set references unknown arc id " + std::to_string(id));
}

namespace {

// Strips '#' comments; returns false for blank lines.
bool significant_line(std::string& line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

Instance parse_digraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    long long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!significant_line(line)) continue;
        std::istringstream hs(line);
        if (!(hs >> n >> m)) fail(line_no, "expected header \"n m\"");
        std::string extra;
        if (hs >> extra) fail(line_no, "trailing tokens after header");
        break;
    }
    if (n < 0) throw ParseError("empty instance: missing \"n m\" header");
    if (n < 1) fail(line_no, "vertex count must be at least 1");
    if (m < 0) fail(line_no, "negative line count");

    std::vector<Arc> arcs;
    std::vector<int> f_ids;
    long long seen = 0;
    while (seen < m && std::getline(in, line)) {
        ++line_no;
        if (!significant_line(line)) continue;
        std::istringstream ls(line);
        long long tail, head, mult, in_f;
        if (!(ls >> tail >> head >> mult >> in_f)) fail(line_no, "expected \"tail head mult inF\"");
        std::string extra;
        if (ls >> extra) fail(line_no, "trailing tokens after arc line");
        if (tail < 0 || tail >= n) fail(line_no, "tail " + std::to_string(tail) + " out of range [0," + std::to_string(n) + ")");
        if (head < 0 || head >= n) fail(line_no, "head " + std::to_string(head) + " out of range [0," + std::to_string(n) + ")");
        if (tail == head) fail(line_no, "self-loop at vertex " + std::to_string(tail));
        if (mult < 1) fail(line_no, "multiplicity must be at least 1");
        if (in_f != 0 && in_f != 1) fail(line_no, "inF flag must be 0 or 1");
        for (long long i = 0; i < mult; ++i) {
            int id = static_cast<int>(arcs.size());
            arcs.push_back(Arc{id, static_cast<int>(tail), static_cast<int>(head)});
            if (in_f) f_ids.push_back(id);
        }
        ++seen;
    }
    if (seen < m) throw ParseError("unexpected end of input: got " + std::to_string(seen) + " of " + std::to_string(m) + " arc lines");

    return Instance{Digraph(static_cast<int>(n), std::move(arcs)), ArcSet(std::move(f_ids))};
}

std::string serialize_instance(const Digraph& d, const ArcSet& f) {
    f.validate_against(d);
    std::ostringstream out;
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const Arc& a : d.arcs())
        out << a.tail << ' ' << a.head << " 1 " << (f.contains(a.id) ? 1 : 0) << '\n';
    return out.str();
}

Digraph reverse_arc(const Digraph& d, int arc_id) { return d.with_arc_reversed(arc_id); }

Digraph reverse_set(const Digraph& d, const ArcSet& f) { return d.with_set_reversed(f); }

}  // namespace revarc
