#include "separ/vectors.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "separ/errors.hpp"
#include "separ/hex.hpp"

namespace separ {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct Pending {
  TestVector v;
  unsigned seen = 0;  // key=1 iv=2 pt=4 ct=8
  bool empty() const { return seen == 0; }
};

void flush(Pending &p, std::vector<TestVector> &out, int line) {
  if (p.empty()) {
    p = Pending{};
    return;
  }
  if (p.seen != 0xF) {
    throw std::invalid_argument("vector ending near line " + std::to_string(line) +
                                " is missing one of key/iv/pt/ct");
  }
  if (p.v.pt.size() != p.v.ct.size()) {
    throw LengthError("pt and ct lengths differ in vector ending near line " + std::to_string(line));
  }
  if (p.v.name.empty()) p.v.name = "vector " + std::to_string(out.size() + 1);
  out.push_back(std::move(p.v));
  p = Pending{};
}

}  // namespace

std::vector<TestVector> parse_vectors(std::istream &in) {
  std::vector<TestVector> out;
  Pending cur;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty()) {
      flush(cur, out, line);
      continue;
    }
    if (s[0] == '#') {
      if (cur.empty() && cur.v.name.empty()) cur.v.name = trim(s.substr(1));
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(line) + ": expected name=value");
    }
    const std::string k = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (k == "key") {
      cur.v.key = MasterKey::from_hex(val);
      cur.seen |= 1;
    } else if (k == "iv") {
      cur.v.iv = Nonce::from_hex(val);
      cur.seen |= 2;
    } else if (k == "pt") {
      cur.v.pt = from_hex(val);
      cur.seen |= 4;
    } else if (k == "ct") {
      cur.v.ct = from_hex(val);
      cur.seen |= 8;
    } else {
      throw std::invalid_argument("line " + std::to_string(line) + ": unknown field '" + k + "'");
    }
  }
  flush(cur, out, line);
  return out;
}

std::vector<TestVector> load_vectors(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_vectors(in);
}

void write_vector(std::ostream &out, const TestVector &v) {
  if (!v.name.empty()) out << "# " << v.name << '\n';
  out << "key=" << v.key.to_hex() << '\n'
      << "iv=" << v.iv.to_hex() << '\n'
      << "pt=" << to_hex(v.pt) << '\n'
      << "ct=" << to_hex(v.ct) << '\n';
}

VectorCheck check_vector(const TestVector &v, const LfsrSpec &lfsr) {
  const Separ cipher(v.key, lfsr);
  VectorCheck r;
  r.name = v.name;
  r.actual = cipher.encrypt_message(v.iv, v.pt);
  r.ok = r.actual == v.ct && cipher.decrypt_message(v.iv, v.ct) == v.pt;
  return r;
}

}  // namespace separ
