#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hsvc/reductions.hpp"
#include "hsvc/set_system.hpp"

// Line-oriented text formats, 1-based in files, 0-based in memory.
//
//   hypergraph:  "p hs <n> <m>" header, one "s e1 e2 ..." line per set
//   psi:         "p psi <V> <E> <t> <F>", then "v <vertex> <part>",
//                "e <u> <v>" and "f <i> <j>" lines
//   graph:       "p graph <n> <m>", then "e <u> <v>" lines
//   layout:      reduction bookkeeping sidecar (gs / el / set / iso lines)
//
// "c ..." comment lines and blank lines are allowed everywhere.

namespace hsvc {

class parse_error : public invalid_input {
public:
    parse_error(int line, const std::string& msg)
        : invalid_input("line " + std::to_string(line) + ": " + msg)
        , line_number(line)
    {
    }
    int line_number;
};

namespace detail {

struct LineReader {
    std::istringstream in;
    int line_number = 0;

    explicit LineReader(std::string_view text)
        : in(std::string(text))
    {
    }

    // Next meaningful line split into tokens; empty result means end of input.
    std::vector<std::string> next()
    {
        std::string line;
        while (std::getline(in, line)) {
            ++line_number;
            std::istringstream ls(line);
            std::vector<std::string> tokens;
            std::string tok;
            while (ls >> tok)
                tokens.push_back(tok);
            if (tokens.empty() || tokens[0] == "c")
                continue;
            return tokens;
        }
        return {};
    }
};

inline int parse_int(const std::string& tok, int line)
{
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw parse_error(line, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size())
        throw parse_error(line, "expected an integer, got '" + tok + "'");
    return value;
}

inline int parse_index(const std::string& tok, int line, int upper, const char* what)
{
    const int v = parse_int(tok, line);
    if (v < 1 || v > upper)
        throw parse_error(line, std::string(what) + " " + tok + " out of range [1," + std::to_string(upper) + "]");
    return v - 1;
}

} // namespace detail

inline SetSystem parse_hypergraph(std::string_view text)
{
    detail::LineReader reader(text);
    auto header = reader.next();
    if (header.empty() || header[0] != "p" || header.size() != 4 || header[1] != "hs")
        throw parse_error(reader.line_number, "expected header 'p hs <n> <m>'");
    const int n = detail::parse_int(header[2], reader.line_number);
    const int m = detail::parse_int(header[3], reader.line_number);
    if (n < 0 || m < 0)
        throw parse_error(reader.line_number, "universe and set counts must be non-negative");

    std::vector<std::vector<int>> sets;
    std::map<std::vector<int>, int> seen; // canonical set -> first line
    for (int row = 0; row < m; ++row) {
        auto tokens = reader.next();
        if (tokens.empty())
            throw parse_error(reader.line_number + 1, "expected " + std::to_string(m) + " set lines, got " + std::to_string(row));
        if (tokens[0] != "s")
            throw parse_error(reader.line_number, "expected a set line 's e1 e2 ...'");
        std::vector<int> set;
        for (std::size_t i = 1; i < tokens.size(); ++i)
            set.push_back(detail::parse_index(tokens[i], reader.line_number, n, "element"));
        std::vector<int> canon = set;
        std::sort(canon.begin(), canon.end());
        for (std::size_t i = 1; i < canon.size(); ++i)
            if (canon[i] == canon[i - 1])
                throw parse_error(reader.line_number, "element " + std::to_string(canon[i] + 1) + " repeated within one set");
        auto [it, inserted] = seen.emplace(canon, reader.line_number);
        if (!inserted)
            throw parse_error(reader.line_number, "duplicate set, first seen at line " + std::to_string(it->second));
        sets.push_back(std::move(set));
    }
    auto extra = reader.next();
    if (!extra.empty())
        throw parse_error(reader.line_number, "unexpected content after " + std::to_string(m) + " set lines");
    return SetSystem(n, std::move(sets));
}

inline std::string serialize_hypergraph(const SetSystem& f)
{
    std::string out = "p hs " + std::to_string(f.universe_size()) + " " + std::to_string(f.set_count()) + "\n";
    for (const ElementSet& set : f.sets()) {
        out += "s";
        for (int e : set)
            out += " " + std::to_string(e + 1);
        out += "\n";
    }
    return out;
}

inline PsiInstance parse_psi(std::string_view text)
{
    detail::LineReader reader(text);
    auto header = reader.next();
    if (header.empty() || header[0] != "p" || header.size() != 6 || header[1] != "psi")
        throw parse_error(reader.line_number, "expected header 'p psi <V> <E> <t> <F>'");
    const int V = detail::parse_int(header[2], reader.line_number);
    const int E = detail::parse_int(header[3], reader.line_number);
    const int t = detail::parse_int(header[4], reader.line_number);
    const int F = detail::parse_int(header[5], reader.line_number);
    if (V < 0 || E < 0 || t < 0 || F < 0)
        throw parse_error(reader.line_number, "header counts must be non-negative");

    std::vector<int> part_of(static_cast<std::size_t>(V), -1);
    std::vector<std::pair<int, int>> host_edges, pattern_edges;
    int v_lines = 0;
    for (;;) {
        auto tokens = reader.next();
        if (tokens.empty())
            break;
        if (tokens[0] == "v" && tokens.size() == 3) {
            const int vertex = detail::parse_index(tokens[1], reader.line_number, V, "vertex");
            const int part = detail::parse_index(tokens[2], reader.line_number, t, "part");
            if (part_of[static_cast<std::size_t>(vertex)] != -1)
                throw parse_error(reader.line_number, "vertex " + tokens[1] + " assigned to a part twice");
            part_of[static_cast<std::size_t>(vertex)] = part;
            ++v_lines;
        } else if (tokens[0] == "e" && tokens.size() == 3) {
            host_edges.emplace_back(detail::parse_index(tokens[1], reader.line_number, V, "vertex"),
                                    detail::parse_index(tokens[2], reader.line_number, V, "vertex"));
        } else if (tokens[0] == "f" && tokens.size() == 3) {
            pattern_edges.emplace_back(detail::parse_index(tokens[1], reader.line_number, t, "pattern vertex"),
                                       detail::parse_index(tokens[2], reader.line_number, t, "pattern vertex"));
        } else {
            throw parse_error(reader.line_number, "expected a 'v', 'e' or 'f' line");
        }
    }
    for (int v = 0; v < V; ++v)
        if (part_of[static_cast<std::size_t>(v)] == -1)
            throw parse_error(reader.line_number, "vertex " + std::to_string(v + 1) + " is not assigned to any part");
    if (v_lines != V || static_cast<int>(host_edges.size()) != E || static_cast<int>(pattern_edges.size()) != F)
        throw parse_error(reader.line_number, "line counts do not match the header");

    PsiInstance inst;
    try {
        inst.host = SimpleGraph(V, std::move(host_edges));
        inst.pattern = SimpleGraph(t, std::move(pattern_edges));
    } catch (const invalid_input& e) {
        throw parse_error(reader.line_number, e.what());
    }
    inst.part_of = std::move(part_of);
    inst.validate();
    return inst;
}

inline std::string serialize_psi(const PsiInstance& inst)
{
    std::string out = "p psi " + std::to_string(inst.host.vertex_count()) + " "
        + std::to_string(inst.host.edge_count()) + " " + std::to_string(inst.pattern.vertex_count()) + " "
        + std::to_string(inst.pattern.edge_count()) + "\n";
    for (int v = 0; v < inst.host.vertex_count(); ++v)
        out += "v " + std::to_string(v + 1) + " " + std::to_string(inst.part_of[static_cast<std::size_t>(v)] + 1) + "\n";
    for (auto [u, v] : inst.host.edges())
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    for (auto [i, j] : inst.pattern.edges())
        out += "f " + std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
    return out;
}

inline SimpleGraph parse_graph(std::string_view text)
{
    detail::LineReader reader(text);
    auto header = reader.next();
    if (header.empty() || header[0] != "p" || header.size() != 4 || header[1] != "graph")
        throw parse_error(reader.line_number, "expected header 'p graph <n> <m>'");
    const int n = detail::parse_int(header[2], reader.line_number);
    const int m = detail::parse_int(header[3], reader.line_number);
    if (n < 0 || m < 0)
        throw parse_error(reader.line_number, "vertex and edge counts must be non-negative");
    std::vector<std::pair<int, int>> edges;
    for (int row = 0; row < m; ++row) {
        auto tokens = reader.next();
        if (tokens.empty() || tokens[0] != "e" || tokens.size() != 3)
            throw parse_error(reader.line_number ? reader.line_number : 1, "expected an edge line 'e <u> <v>'");
        edges.emplace_back(detail::parse_index(tokens[1], reader.line_number, n, "vertex"),
                           detail::parse_index(tokens[2], reader.line_number, n, "vertex"));
    }
    auto extra = reader.next();
    if (!extra.empty())
        throw parse_error(reader.line_number, "unexpected content after " + std::to_string(m) + " edge lines");
    try {
        return SimpleGraph(n, std::move(edges));
    } catch (const invalid_input& e) {
        throw parse_error(reader.line_number, e.what());
    }
}

inline std::string serialize_graph(const SimpleGraph& g)
{
    std::string out = "p graph " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

namespace detail {

inline std::string ground_ref_text(const GroundSetRef& ref)
{
    if (ref.is_y)
        return "Y " + std::to_string(ref.i + 1) + " " + std::to_string(ref.j + 1) + " " + std::to_string(ref.level);
    return "X " + std::to_string(ref.i + 1) + " " + std::to_string(ref.level);
}

} // namespace detail

inline std::string serialize_layout(const ReductionLayout& layout)
{
    std::string out = "p layout " + std::to_string(layout.ground_sets.size()) + " "
        + std::to_string(layout.elements.size()) + " " + std::to_string(layout.set_index.size()) + " "
        + std::to_string(layout.isolated_parts.size()) + " " + std::to_string(layout.paper_budget) + "\n";
    for (const auto& [ref, ids] : layout.ground_sets)
        out += "gs " + detail::ground_ref_text(ref) + "\n";
    for (std::size_t id = 0; id < layout.elements.size(); ++id) {
        const LayoutElement& el = layout.elements[id];
        out += "el " + std::to_string(id + 1) + " " + detail::ground_ref_text(el.ground);
        out += " " + std::to_string(el.u + 1);
        if (el.ground.is_y)
            out += " " + std::to_string(el.v + 1);
        out += "\n";
    }
    for (const auto& [tag, pos] : layout.set_index) {
        out += "set " + std::to_string(pos + 1) + " ";
        switch (tag.kind) {
        case 'A':
            out += "A " + std::to_string(tag.i + 1) + " " + std::to_string(tag.u + 1) + " " + std::to_string(tag.level);
            break;
        case 'B':
            out += "B " + std::to_string(tag.i + 1) + " " + std::to_string(tag.j + 1) + " "
                + std::to_string(tag.u + 1) + " " + std::to_string(tag.v + 1) + " " + std::to_string(tag.level);
            break;
        case 'C':
            out += "C " + std::to_string(tag.i + 1) + " " + std::to_string(tag.j + 1) + " " + std::to_string(tag.u + 1);
            break;
        case 'P':
            out += "Cp " + std::to_string(tag.i + 1) + " " + std::to_string(tag.j + 1) + " " + std::to_string(tag.u + 1);
            break;
        case 'D':
            out += "D " + std::to_string(tag.i + 1) + " " + std::to_string(tag.j + 1) + " "
                + std::to_string(tag.u + 1) + " " + std::to_string(tag.v + 1);
            break;
        case 'E':
            out += "E " + detail::ground_ref_text({tag.is_y_ground, tag.i, tag.j, tag.level});
            break;
        default:
            throw internal_error("serialize_layout: unknown set tag kind");
        }
        out += "\n";
    }
    for (auto [i, u] : layout.isolated_parts)
        out += "iso " + std::to_string(i + 1) + " " + std::to_string(u + 1) + "\n";
    return out;
}

inline ReductionLayout parse_layout(std::string_view text)
{
    detail::LineReader reader(text);
    auto header = reader.next();
    if (header.empty() || header[0] != "p" || header.size() != 7 || header[1] != "layout")
        throw parse_error(reader.line_number, "expected header 'p layout <gs> <elems> <tags> <iso> <paper_budget>'");
    const int num_gs = detail::parse_int(header[2], reader.line_number);
    const int num_elems = detail::parse_int(header[3], reader.line_number);
    const int num_tags = detail::parse_int(header[4], reader.line_number);
    const int num_iso = detail::parse_int(header[5], reader.line_number);
    ReductionLayout layout;
    layout.paper_budget = detail::parse_int(header[6], reader.line_number);

    auto read_ground_ref = [&](const std::vector<std::string>& tokens, std::size_t at) -> std::pair<GroundSetRef, std::size_t> {
        if (at >= tokens.size())
            throw parse_error(reader.line_number, "truncated ground-set reference");
        GroundSetRef ref;
        if (tokens[at] == "X") {
            if (at + 2 >= tokens.size())
                throw parse_error(reader.line_number, "truncated X ground-set reference");
            ref.is_y = false;
            ref.i = detail::parse_int(tokens[at + 1], reader.line_number) - 1;
            ref.level = detail::parse_int(tokens[at + 2], reader.line_number);
            return {ref, at + 3};
        }
        if (tokens[at] == "Y") {
            if (at + 3 >= tokens.size())
                throw parse_error(reader.line_number, "truncated Y ground-set reference");
            ref.is_y = true;
            ref.i = detail::parse_int(tokens[at + 1], reader.line_number) - 1;
            ref.j = detail::parse_int(tokens[at + 2], reader.line_number) - 1;
            ref.level = detail::parse_int(tokens[at + 3], reader.line_number);
            return {ref, at + 4};
        }
        throw parse_error(reader.line_number, "ground-set reference must start with X or Y");
    };

    layout.elements.resize(static_cast<std::size_t>(num_elems));
    std::vector<char> element_seen(static_cast<std::size_t>(num_elems), 0);
    for (;;) {
        auto tokens = reader.next();
        if (tokens.empty())
            break;
        if (tokens[0] == "gs") {
            auto [ref, end] = read_ground_ref(tokens, 1);
            if (end != tokens.size())
                throw parse_error(reader.line_number, "trailing tokens on gs line");
            layout.ground_sets.emplace_back(ref, std::vector<int>{});
        } else if (tokens[0] == "el") {
            if (tokens.size() < 2)
                throw parse_error(reader.line_number, "truncated el line");
            const int id = detail::parse_index(tokens[1], reader.line_number, num_elems, "element");
            auto [ref, at] = read_ground_ref(tokens, 2);
            LayoutElement el;
            el.ground = ref;
            if (at >= tokens.size())
                throw parse_error(reader.line_number, "el line is missing its key");
            el.u = detail::parse_int(tokens[at], reader.line_number) - 1;
            ++at;
            if (ref.is_y) {
                if (at >= tokens.size())
                    throw parse_error(reader.line_number, "y element is missing its second endpoint");
                el.v = detail::parse_int(tokens[at], reader.line_number) - 1;
                ++at;
            }
            if (at != tokens.size())
                throw parse_error(reader.line_number, "trailing tokens on el line");
            if (element_seen[static_cast<std::size_t>(id)])
                throw parse_error(reader.line_number, "element " + tokens[1] + " described twice");
            element_seen[static_cast<std::size_t>(id)] = 1;
            layout.elements[static_cast<std::size_t>(id)] = el;
            bool attached = false;
            for (auto& [gref, ids] : layout.ground_sets)
                if (gref == el.ground) {
                    ids.push_back(id);
                    attached = true;
                    break;
                }
            if (!attached)
                throw parse_error(reader.line_number, "el line references an unknown ground set");
        } else if (tokens[0] == "set") {
            if (tokens.size() < 3)
                throw parse_error(reader.line_number, "truncated set line");
            const int pos = detail::parse_int(tokens[1], reader.line_number) - 1;
            LayoutSetTag tag;
            const std::string& kind = tokens[2];
            auto need = [&](std::size_t count) {
                if (tokens.size() != count)
                    throw parse_error(reader.line_number, "wrong token count on set line");
            };
            if (kind == "A") {
                need(6);
                tag.kind = 'A';
                tag.i = detail::parse_int(tokens[3], reader.line_number) - 1;
                tag.u = detail::parse_int(tokens[4], reader.line_number) - 1;
                tag.level = detail::parse_int(tokens[5], reader.line_number);
            } else if (kind == "B") {
                need(8);
                tag.kind = 'B';
                tag.i = detail::parse_int(tokens[3], reader.line_number) - 1;
                tag.j = detail::parse_int(tokens[4], reader.line_number) - 1;
                tag.u = detail::parse_int(tokens[5], reader.line_number) - 1;
                tag.v = detail::parse_int(tokens[6], reader.line_number) - 1;
                tag.level = detail::parse_int(tokens[7], reader.line_number);
            } else if (kind == "C" || kind == "Cp") {
                need(6);
                tag.kind = kind == "C" ? 'C' : 'P';
                tag.i = detail::parse_int(tokens[3], reader.line_number) - 1;
                tag.j = detail::parse_int(tokens[4], reader.line_number) - 1;
                tag.u = detail::parse_int(tokens[5], reader.line_number) - 1;
            } else if (kind == "D") {
                need(7);
                tag.kind = 'D';
                tag.i = detail::parse_int(tokens[3], reader.line_number) - 1;
                tag.j = detail::parse_int(tokens[4], reader.line_number) - 1;
                tag.u = detail::parse_int(tokens[5], reader.line_number) - 1;
                tag.v = detail::parse_int(tokens[6], reader.line_number) - 1;
            } else if (kind == "E") {
                tag.kind = 'E';
                auto [ref, end] = read_ground_ref(tokens, 3);
                if (end != tokens.size())
                    throw parse_error(reader.line_number, "trailing tokens on set line");
                tag.is_y_ground = ref.is_y;
                tag.i = ref.i;
                tag.j = ref.j;
                tag.level = ref.level;
            } else {
                throw parse_error(reader.line_number, "unknown set tag kind '" + kind + "'");
            }
            layout.set_index.emplace_back(tag, pos);
        } else if (tokens[0] == "iso") {
            if (tokens.size() != 3)
                throw parse_error(reader.line_number, "expected 'iso <part> <vertex>'");
            layout.isolated_parts.emplace_back(detail::parse_int(tokens[1], reader.line_number) - 1,
                                               detail::parse_int(tokens[2], reader.line_number) - 1);
        } else {
            throw parse_error(reader.line_number, "expected a gs, el, set or iso line");
        }
    }
    if (static_cast<int>(layout.ground_sets.size()) != num_gs
        || static_cast<int>(layout.set_index.size()) != num_tags
        || static_cast<int>(layout.isolated_parts.size()) != num_iso)
        throw parse_error(reader.line_number, "line counts do not match the header");
    for (int id = 0; id < num_elems; ++id)
        if (!element_seen[static_cast<std::size_t>(id)])
            throw parse_error(reader.line_number, "element " + std::to_string(id + 1) + " is never described");
    layout.budget = num_gs;
    return layout;
}

} // namespace hsvc
