// Index persistence: length-prefixed little-endian records behind a magic
// and version header, plus a plain-text manifest sidecar for auditing.

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "semidx/engine.hpp"

namespace semidx {

namespace {

constexpr char kIndexMagic[4] = {'S', 'I', 'D', 'X'};
constexpr char kCacheMagic[4] = {'S', 'D', 'S', 'C'};
constexpr std::uint32_t kCacheVersion = 1;

class Writer {
  public:
    explicit Writer(std::ostream& out) : out_(&out) {}

    void u8(std::uint8_t v) { raw(&v, 1); }
    void u32(std::uint32_t v) {
        std::uint8_t buf[4];
        for (int i = 0; i < 4; ++i) buf[i] = static_cast<std::uint8_t>(v >> (8 * i));
        raw(buf, 4);
    }
    void u64(std::uint64_t v) {
        std::uint8_t buf[8];
        for (int i = 0; i < 8; ++i) buf[i] = static_cast<std::uint8_t>(v >> (8 * i));
        raw(buf, 8);
    }
    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
    void str(std::string_view s) {
        u64(s.size());
        raw(s.data(), s.size());
    }
    void unit(const IndexUnit& u) {
        if (u.is_concept()) {
            u8(0);
            u8(static_cast<std::uint8_t>(u.synset().pos));
            u32(u.synset().offset);
        } else {
            u8(1);
            str(u.lemma());
        }
    }
    void raw(const void* data, std::size_t n) {
        out_->write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
    }

  private:
    std::ostream* out_;
};

class Reader {
  public:
    explicit Reader(std::string bytes) : bytes_(std::move(bytes)) {}

    std::uint8_t u8() {
        need(1);
        return static_cast<std::uint8_t>(bytes_[pos_++]);
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes_[pos_ + i]))
                 << (8 * i);
        pos_ += 4;
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(bytes_[pos_ + i]))
                 << (8 * i);
        pos_ += 8;
        return v;
    }
    double f64() { return std::bit_cast<double>(u64()); }
    std::string str() {
        std::uint64_t n = u64();
        need(n);
        std::string s = bytes_.substr(pos_, n);
        pos_ += n;
        return s;
    }
    IndexUnit unit() {
        std::uint8_t kind = u8();
        if (kind == 0) {
            std::uint8_t pos = u8();
            if (pos > 3) throw CorruptIndex(pos_);
            std::uint32_t offset = u32();
            return IndexUnit::of({static_cast<Pos>(pos), offset});
        }
        if (kind != 1) throw CorruptIndex(pos_);
        return IndexUnit::orphan(str());
    }
    void expect_magic(const char magic[4]) {
        need(4);
        if (std::memcmp(bytes_.data() + pos_, magic, 4) != 0) throw CorruptIndex(pos_);
        pos_ += 4;
    }
    bool at_end() const { return pos_ == bytes_.size(); }
    std::uint64_t offset() const { return pos_; }

  private:
    void need(std::uint64_t n) {
        if (pos_ + n > bytes_.size()) throw CorruptIndex(pos_);
    }
    std::string bytes_;
    std::uint64_t pos_ = 0;
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return std::move(out).str();
}

void write_weighting(Writer& w, const WeightingConfig& cfg) {
    w.f64(cfg.alpha);
    w.u8(cfg.absolute_threshold ? 1 : 0);
    w.f64(cfg.absolute_threshold.value_or(0.0));
    w.u8(static_cast<std::uint8_t>(cfg.scheme));
    w.f64(cfg.bm25_k1);
    w.f64(cfg.bm25_b);
    w.u8(cfg.raw_tf ? 1 : 0);
    w.u8(cfg.raw_sim ? 1 : 0);
}

WeightingConfig read_weighting(Reader& r) {
    WeightingConfig cfg;
    cfg.alpha = r.f64();
    bool has_threshold = r.u8() != 0;
    double threshold = r.f64();
    if (has_threshold) cfg.absolute_threshold = threshold;
    std::uint8_t scheme = r.u8();
    if (scheme > 2) throw CorruptIndex(r.offset());
    cfg.scheme = static_cast<Scheme>(scheme);
    cfg.bm25_k1 = r.f64();
    cfg.bm25_b = r.f64();
    cfg.raw_tf = r.u8() != 0;
    cfg.raw_sim = r.u8() != 0;
    return cfg;
}

}  // namespace

void save_index(const Index& index, const std::filesystem::path& path) {
    std::ostringstream buffer(std::ios::binary);
    Writer w(buffer);
    w.raw(kIndexMagic, 4);
    w.u32(Index::kFormatVersion);
    w.u8(static_cast<std::uint8_t>(index.representation));
    write_weighting(w, index.weighting);
    w.str(index.config_text);

    w.u64(index.stats.doc_count);
    w.f64(index.stats.mean_cc);
    w.f64(index.stats.avg_doclen);
    w.u64(index.stats.df.size());
    for (const auto& [unit, df] : index.stats.df) {
        w.unit(unit);
        w.u32(df);
    }
    w.u64(index.stats.central_count.size());
    for (const auto& [unit, n] : index.stats.central_count) {
        w.unit(unit);
        w.u32(n);
    }

    w.u64(index.doc_ids.size());
    for (const auto& doc_id : index.doc_ids) {
        const auto& vec = index.vectors.at(doc_id);
        w.str(doc_id);
        w.u64(vec.weights.size());
        for (const auto& [unit, weight] : vec.weights) {
            w.unit(unit);
            w.f64(weight);
        }
        w.f64(vec.norm);
    }

    std::string bytes = std::move(buffer).str();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.close();
    if (!out) throw Error("write failed: " + path.string());

    std::size_t posting_entries = 0;
    for (const auto& [unit, list] : index.postings) posting_entries += list.size();
    std::ofstream manifest(path.string() + ".manifest", std::ios::trunc);
    manifest << "format_version\t" << Index::kFormatVersion << '\n'
             << "representation\t" << representation_name(index.representation) << '\n'
             << "scheme\t" << scheme_name(index.weighting.scheme) << '\n'
             << "alpha\t" << index.weighting.alpha << '\n'
             << "documents\t" << index.doc_ids.size() << '\n'
             << "distinct_units\t" << index.postings.size() << '\n'
             << "posting_entries\t" << posting_entries << '\n'
             << "config_hash\t" << fnv1a64(index.config_text) << '\n'
             << "index_bytes\t" << bytes.size() << '\n'
             << "index_hash\t" << fnv1a64(bytes) << '\n';
}

Index load_index(const std::filesystem::path& path) {
    Reader r(slurp(path));
    r.expect_magic(kIndexMagic);
    std::uint32_t version = r.u32();
    if (version != Index::kFormatVersion) throw VersionMismatch(version, Index::kFormatVersion);

    Index index;
    std::uint8_t representation = r.u8();
    if (representation > 1) throw CorruptIndex(r.offset());
    index.representation = static_cast<Representation>(representation);
    index.weighting = read_weighting(r);
    index.config_text = r.str();

    index.stats.doc_count = r.u64();
    index.stats.mean_cc = r.f64();
    index.stats.avg_doclen = r.f64();
    for (std::uint64_t i = 0, n = r.u64(); i < n; ++i) {
        IndexUnit unit = r.unit();
        index.stats.df.emplace(std::move(unit), r.u32());
    }
    for (std::uint64_t i = 0, n = r.u64(); i < n; ++i) {
        IndexUnit unit = r.unit();
        index.stats.central_count.emplace(std::move(unit), r.u32());
    }

    for (std::uint64_t d = 0, ndocs = r.u64(); d < ndocs; ++d) {
        DocumentVector vec;
        vec.doc_id = r.str();
        for (std::uint64_t i = 0, n = r.u64(); i < n; ++i) {
            IndexUnit unit = r.unit();
            double weight = r.f64();
            vec.weights.emplace(std::move(unit), weight);
        }
        vec.norm = r.f64();
        index.doc_ids.push_back(vec.doc_id);
        for (const auto& [unit, weight] : vec.weights)
            index.postings[unit].emplace_back(vec.doc_id, weight);
        index.vectors.emplace(vec.doc_id, std::move(vec));
    }
    if (!r.at_end()) throw CorruptIndex(r.offset());
    return index;
}

void save_semantics_cache(const std::filesystem::path& path, std::uint64_t key,
                          const std::vector<DocSemantics>& docs) {
    std::ostringstream buffer(std::ios::binary);
    Writer w(buffer);
    w.raw(kCacheMagic, 4);
    w.u32(kCacheVersion);
    w.u64(key);
    w.u64(docs.size());
    for (const auto& doc : docs) {
        w.str(doc.doc_id);
        w.u64(doc.units.size());
        for (const auto& u : doc.units) {
            w.unit(u.unit);
            w.f64(u.raw_tf);
            w.f64(u.sim);
        }
    }
    std::string bytes = std::move(buffer).str();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::optional<std::vector<DocSemantics>> load_semantics_cache(
    const std::filesystem::path& path, std::uint64_t key) {
    if (!std::filesystem::exists(path)) return std::nullopt;
    Reader r(slurp(path));
    r.expect_magic(kCacheMagic);
    if (r.u32() != kCacheVersion) return std::nullopt;
    if (r.u64() != key) return std::nullopt;  // stale: corpus or stores changed
    std::vector<DocSemantics> docs;
    for (std::uint64_t d = 0, ndocs = r.u64(); d < ndocs; ++d) {
        DocSemantics doc;
        doc.doc_id = r.str();
        for (std::uint64_t i = 0, n = r.u64(); i < n; ++i) {
            DocSemantics::Unit u;
            u.unit = r.unit();
            u.raw_tf = r.f64();
            u.sim = r.f64();
            doc.units.push_back(std::move(u));
        }
        docs.push_back(std::move(doc));
    }
    if (!r.at_end()) throw CorruptIndex(r.offset());
    return docs;
}

}  // namespace semidx
