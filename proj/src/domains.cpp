#include "semidx/domains.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

namespace semidx {

namespace {

void chomp(std::string& line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.emplace_back(s.substr(start, i - start));
    }
    return out;
}

}  // namespace

DomainDb DomainDb::load(const std::filesystem::path& mapping_file,
                        const std::filesystem::path& hierarchy_file) {
    DomainDb db = load_hierarchy(hierarchy_file);
    db.load_mapping(mapping_file);
    return db;
}

DomainDb DomainDb::load_hierarchy(const std::filesystem::path& hierarchy_file) {
    std::ifstream in(hierarchy_file);
    if (!in) throw Error("cannot open " + hierarchy_file.string());

    DomainDb db;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        chomp(line);
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_ws(line);
        if (fields.size() != 2)
            throw MalformedLine(hierarchy_file.string(), line_no, "expected child<TAB>parent");
        DomainNode node;
        node.name = lowercase(fields[0]);
        if (fields[1] != "-") node.parent = lowercase(fields[1]);
        node.is_factotum = node.name == kFactotum;
        if (!node.parent && !node.is_factotum && node.name != kTopLevel)
            throw MalformedLine(hierarchy_file.string(), line_no,
                                "only top_level and factotum may lack a parent");
        if (!db.nodes_.emplace(node.name, std::move(node)).second)
            throw MalformedLine(hierarchy_file.string(), line_no, "duplicate domain");
    }
    if (!db.nodes_.count(std::string(kTopLevel)))
        throw UnknownDomainLabel(std::string(kTopLevel));
    if (!db.nodes_.count(std::string(kFactotum)))
        db.nodes_.emplace(std::string(kFactotum),
                          DomainNode{std::string(kFactotum), std::nullopt, 0, true});

    // depth(child) = depth(parent) + 1, walking each parent chain with a
    // visited guard to reject cycles. Labels that bottom out at factotum
    // are generic: flagged like factotum itself, no tree depth.
    for (auto& [name, node] : db.nodes_) {
        if (node.is_factotum) continue;
        int depth = 1;
        std::vector<std::string_view> seen{name};
        const DomainNode* cur = &node;
        while (cur->parent) {
            const auto& parent_name = *cur->parent;
            if (std::find(seen.begin(), seen.end(), parent_name) != seen.end())
                throw CycleInHierarchy(parent_name);
            seen.push_back(parent_name);
            auto it = db.nodes_.find(parent_name);
            if (it == db.nodes_.end()) throw UnknownDomainLabel(parent_name);
            cur = &it->second;
            ++depth;
        }
        if (cur->is_factotum) {
            node.is_factotum = true;
            node.depth = 0;
        } else if (cur->name == kTopLevel) {
            node.depth = depth;
        } else {
            throw UnknownDomainLabel(std::string(cur->name));
        }
    }
    return db;
}

void DomainDb::load_mapping(const std::filesystem::path& mapping_file) {
    std::ifstream in(mapping_file);
    if (!in) throw Error("cannot open " + mapping_file.string());

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        chomp(line);
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_ws(line);
        if (fields.size() < 2)
            throw MalformedLine(mapping_file.string(), line_no,
                                "expected offset-pos<TAB>domain...");
        const std::string& key = fields[0];
        auto dash = key.rfind('-');
        if (dash == std::string::npos || dash + 2 != key.size())
            throw MalformedLine(mapping_file.string(), line_no, "bad synset key");
        auto pos = pos_from_letter(key[dash + 1]);
        std::uint32_t offset = 0;
        auto [p, ec] = std::from_chars(key.data(), key.data() + dash, offset);
        if (!pos || ec != std::errc{} || p != key.data() + dash)
            throw MalformedLine(mapping_file.string(), line_no, "bad synset key");

        std::vector<std::string> labels;
        for (std::size_t i = 1; i < fields.size(); ++i) {
            auto label = lowercase(fields[i]);
            if (!nodes_.count(label)) throw UnknownDomainLabel(label);
            if (std::find(labels.begin(), labels.end(), label) == labels.end())
                labels.push_back(std::move(label));
        }
        annotations_[SynsetId{*pos, offset}] = std::move(labels);
    }
}

const DomainNode& DomainDb::node(std::string_view name) const {
    auto it = nodes_.find(std::string(name));
    if (it == nodes_.end()) throw UnknownDomainLabel(std::string(name));
    return it->second;
}

bool DomainDb::has_domain(std::string_view name) const {
    return nodes_.count(std::string(name)) > 0;
}

bool DomainDb::is_generic(std::string_view name) const { return node(name).is_factotum; }

int DomainDb::depth(std::string_view name) const {
    const DomainNode& n = node(name);
    if (n.is_factotum) throw FactotumNotComparable();
    return n.depth;
}

std::string DomainDb::least_common_subsumer(std::string_view a, std::string_view b) const {
    const DomainNode* na = &node(a);
    const DomainNode* nb = &node(b);
    if (na->is_factotum || nb->is_factotum) throw FactotumNotComparable();
    // Walk the deeper chain up to equal depth, then climb both together.
    while (na->depth > nb->depth) na = &node(*na->parent);
    while (nb->depth > na->depth) nb = &node(*nb->parent);
    while (na->name != nb->name) {
        na = &node(*na->parent);
        nb = &node(*nb->parent);
    }
    return na->name;
}

const std::vector<std::string>& DomainDb::domains_of(SynsetId id) const {
    auto it = annotations_.find(id);
    if (it == annotations_.end() || it->second.empty()) return factotum_fallback_;
    return it->second;
}

}  // namespace semidx
