// Containers of natural numbers implemented as a vector plus a hidden
// operation counter. Speaks the axiomtest line protocol on stdin/stdout and
// never reveals container values (answers OPAQUE for them).

#include <cctype>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

struct Value {
  enum class Kind { kBool, kNat, kContainer } kind = Kind::kBool;
  bool b = false;
  std::uint64_t n = 0;
  std::vector<std::uint64_t> items;  // head first
  std::uint64_t counter = 0;         // operations applied so far; never observable
};

class Evaluator {
 public:
  explicit Evaluator(const std::string& text) : s_(text) {}

  Value run() {
    Value v = term();
    skip();
    if (i_ != s_.size()) throw std::runtime_error("trailing input");
    return v;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(const std::string& tok) {
    skip();
    if (s_.compare(i_, tok.size(), tok) != 0) return false;
    i_ += tok.size();
    return true;
  }

  void expect(const std::string& tok) {
    if (!eat(tok)) throw std::runtime_error("expected '" + tok + "'");
  }

  Value term() {
    Value head = primary();
    if (!eat("::")) return head;
    Value tail = term();
    if (head.kind != Value::Kind::kNat || tail.kind != Value::Kind::kContainer)
      throw std::runtime_error(":: expects a number and a container");
    tail.items.insert(tail.items.begin(), head.n);
    ++tail.counter;
    return tail;
  }

  std::vector<Value> args() {
    std::vector<Value> out;
    expect("(");
    out.push_back(term());
    while (eat(",")) out.push_back(term());
    expect(")");
    return out;
  }

  static const Value& want(const std::vector<Value>& a, std::size_t n, std::size_t i, Value::Kind k) {
    if (a.size() != n) throw std::runtime_error("wrong number of arguments");
    if (a[i].kind != k) throw std::runtime_error("argument of the wrong sort");
    return a[i];
  }

  Value primary() {
    skip();
    if (eat("(")) {
      Value v = term();
      expect(")");
      return v;
    }
    if (eat("[]")) return Value{Value::Kind::kContainer};
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      Value v{Value::Kind::kNat};
      v.n = std::stoull(s_.substr(i_, j - i_));
      i_ = j;
      return v;
    }
    std::size_t j = i_;
    while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
    std::string name = s_.substr(i_, j - i_);
    i_ = j;
    using K = Value::Kind;
    if (name == "true" || name == "false") {
      Value v{K::kBool};
      v.b = name == "true";
      return v;
    }
    if (name == "succ") {
      auto a = args();
      Value v = want(a, 1, 0, K::kNat);
      ++v.n;
      return v;
    }
    if (name == "eq") {
      auto a = args();
      Value v{K::kBool};
      v.b = want(a, 2, 0, K::kNat).n == want(a, 2, 1, K::kNat).n;
      return v;
    }
    if (name == "notb") {
      auto a = args();
      Value v{K::kBool};
      v.b = !want(a, 1, 0, K::kBool).b;
      return v;
    }
    if (name == "isin") {
      auto a = args();
      std::uint64_t x = want(a, 2, 0, K::kNat).n;
      Value v{K::kBool};
      for (auto item : want(a, 2, 1, K::kContainer).items) v.b = v.b || item == x;
      return v;
    }
    if (name == "remove") {
      auto a = args();
      std::uint64_t x = want(a, 2, 0, K::kNat).n;
      Value c = want(a, 2, 1, K::kContainer);
      for (auto it = c.items.begin(); it != c.items.end(); ++it) {
        if (*it == x) {
          c.items.erase(it);
          break;
        }
      }
      ++c.counter;
      return c;
    }
    throw std::runtime_error("unknown symbol '" + name + "'");
  }

  std::string s_;
  std::size_t i_ = 0;
};

std::string answer(const std::string& text) {
  try {
    Value v = Evaluator(text).run();
    switch (v.kind) {
      case Value::Kind::kBool: return v.b ? "VALUE true" : "VALUE false";
      case Value::Kind::kNat: return "VALUE " + std::to_string(v.n);
      case Value::Kind::kContainer: return "OPAQUE";
    }
  } catch (const std::exception& e) {
    return std::string("ERROR ") + e.what();
  }
  return "ERROR internal";
}

}  // namespace

int main() {
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("HELLO", 0) == 0) {
      std::cout << "OK hidden-counter" << std::endl;
    } else if (line.rfind("EVAL ", 0) == 0) {
      std::cout << answer(line.substr(5)) << std::endl;
    } else if (line == "BYE") {
      break;
    } else {
      std::cout << "ERROR unknown request" << std::endl;
    }
  }
  return 0;
}
