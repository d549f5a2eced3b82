#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semidx {

/// Base class for all errors raised by the library. Exit-code mapping in
/// the CLI: data errors -> 2, invariant violations -> 3.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class MalformedLine : public Error {
  public:
    MalformedLine(const std::string& file, std::size_t line_no, const std::string& what)
        : Error(file + ":" + std::to_string(line_no) + ": malformed line: " + what),
          file(file),
          line_no(line_no) {}
    std::string file;
    std::size_t line_no;
};

class DanglingPointer : public Error {
  public:
    DanglingPointer(const std::string& source, const std::string& target)
        : Error("dangling pointer from " + source + " to " + target) {}
};

class UnknownSynset : public Error {
  public:
    explicit UnknownSynset(const std::string& id) : Error("unknown synset: " + id) {}
};

class UnknownDomainLabel : public Error {
  public:
    explicit UnknownDomainLabel(const std::string& name)
        : Error("unknown domain label: " + name) {}
};

class CycleInHierarchy : public Error {
  public:
    explicit CycleInHierarchy(const std::string& where)
        : Error("cycle in hierarchy at " + where) {}
};

class FactotumNotComparable : public Error {
  public:
    FactotumNotComparable() : Error("factotum has no position in the domain tree") {}
};

class NoSenses : public Error {
  public:
    explicit NoSenses(const std::string& lemma) : Error("no senses for term: " + lemma) {}
};

class MalformedRecord : public Error {
  public:
    explicit MalformedRecord(std::size_t line_no)
        : Error("malformed corpus record at line " + std::to_string(line_no)), line_no(line_no) {}
    std::size_t line_no;
};

class EmptyCorpus : public Error {
  public:
    explicit EmptyCorpus(const std::string& path) : Error("corpus is empty: " + path) {}
};

class VersionMismatch : public Error {
  public:
    VersionMismatch(std::uint32_t found, std::uint32_t expected)
        : Error("index version " + std::to_string(found) + ", reader expects "
                + std::to_string(expected)) {}
};

class CorruptIndex : public Error {
  public:
    explicit CorruptIndex(std::uint64_t offset)
        : Error("corrupt index file at byte " + std::to_string(offset)), offset(offset) {}
    std::uint64_t offset;
};

class MalformedQrelLine : public Error {
  public:
    explicit MalformedQrelLine(std::size_t line_no)
        : Error("malformed qrels line " + std::to_string(line_no)), line_no(line_no) {}
    std::size_t line_no;
};

class NonContiguousRanks : public Error {
  public:
    explicit NonContiguousRanks(const std::string& qid)
        : Error("non-contiguous ranks for query " + qid) {}
};

class NoRelevantDocs : public Error {
  public:
    explicit NoRelevantDocs(const std::string& qid)
        : Error("no relevant documents judged for query " + qid) {}
};

class ConfigError : public Error {
  public:
    explicit ConfigError(const std::string& msg) : Error("config: " + msg) {}
};

}  // namespace semidx
