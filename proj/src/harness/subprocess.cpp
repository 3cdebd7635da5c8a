#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <thread>

#include "axiomtest/parser.hpp"
#include "harness_internal.hpp"

namespace axiomtest {

namespace detail {

EvalOutcome parse_response(const std::string& line, const Signature& sig) {
  if (line == "OPAQUE") return {EvalOutcome::Kind::kOpaque, std::nullopt, {}};
  if (line.rfind("ERROR", 0) == 0)
    return {EvalOutcome::Kind::kError, std::nullopt, line.size() > 6 ? line.substr(6) : "unspecified error"};
  if (line.rfind("VALUE ", 0) == 0) {
    try {
      Term t = parse_term(line.substr(6), sig);
      if (!t.is_ground() || !t.is_constructor_term())
        return {EvalOutcome::Kind::kProtocol, std::nullopt, "value is not a ground constructor term: " + line};
      return {EvalOutcome::Kind::kValue, t, {}};
    } catch (const Error& e) {
      return {EvalOutcome::Kind::kProtocol, std::nullopt, std::string("unreadable value: ") + e.what()};
    }
  }
  return {EvalOutcome::Kind::kProtocol, std::nullopt, "unexpected response: " + line};
}

}  // namespace detail

namespace {

class Subprocess {
 public:
  explicit Subprocess(const std::string& command) {
    static const bool ignored = [] {
      ::signal(SIGPIPE, SIG_IGN);
      return true;
    }();
    (void)ignored;
    int in[2], out[2];
    if (::pipe2(in, O_CLOEXEC) != 0) throw HandshakeError("cannot create pipe");
    if (::pipe2(out, O_CLOEXEC) != 0) {
      ::close(in[0]);
      ::close(in[1]);
      throw HandshakeError("cannot create pipe");
    }
    pid_ = ::fork();
    if (pid_ < 0) throw HandshakeError("cannot fork");
    if (pid_ == 0) {
      ::dup2(in[0], STDIN_FILENO);
      ::dup2(out[1], STDOUT_FILENO);
      ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
      ::_exit(127);
    }
    ::close(in[0]);
    ::close(out[1]);
    to_child_ = in[1];
    from_child_ = out[0];
  }

  Subprocess(const Subprocess&) = delete;
  Subprocess& operator=(const Subprocess&) = delete;

  ~Subprocess() {
    if (to_child_ >= 0) ::close(to_child_);
    if (from_child_ >= 0) ::close(from_child_);
    int status = 0;
    for (int i = 0; i < 50; ++i) {
      if (::waitpid(pid_, &status, WNOHANG) == pid_) return;
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
    ::kill(pid_, SIGKILL);
    ::waitpid(pid_, &status, 0);
  }

  bool write_line(const std::string& line) {
    std::string data = line + "\n";
    std::size_t done = 0;
    while (done < data.size()) {
      ssize_t n = ::write(to_child_, data.data() + done, data.size() - done);
      if (n < 0 && errno == EINTR) continue;
      if (n <= 0) return false;
      done += static_cast<std::size_t>(n);
    }
    return true;
  }

  /// Empty on end of input or timeout.
  std::optional<std::string> read_line(int timeout_ms) {
    auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
    for (;;) {
      if (auto pos = buffer_.find('\n'); pos != std::string::npos) {
        std::string line = buffer_.substr(0, pos);
        buffer_.erase(0, pos + 1);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return line;
      }
      auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
      if (left.count() <= 0) return std::nullopt;
      pollfd pfd{from_child_, POLLIN, 0};
      int rc = ::poll(&pfd, 1, static_cast<int>(left.count()));
      if (rc < 0 && errno == EINTR) continue;
      if (rc <= 0) return std::nullopt;
      char chunk[4096];
      ssize_t n = ::read(from_child_, chunk, sizeof chunk);
      if (n < 0 && errno == EINTR) continue;
      if (n <= 0) return std::nullopt;
      buffer_.append(chunk, static_cast<std::size_t>(n));
    }
  }

 private:
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

class ExternalSession : public IutSession {
 public:
  ExternalSession(const Signature& sig, const std::string& command, int timeout_ms)
      : sig_(sig), proc_(command), timeout_ms_(timeout_ms) {
    if (!proc_.write_line("HELLO axiomtest/1")) throw HandshakeError("cannot write to '" + command + "'");
    auto reply = proc_.read_line(timeout_ms_);
    if (!reply) throw HandshakeError("no handshake reply from '" + command + "'");
    if (*reply != "OK" && reply->rfind("OK ", 0) != 0)
      throw HandshakeError("bad handshake reply from '" + command + "': " + *reply);
    name_ = reply->size() > 3 ? reply->substr(3) : command;
  }

  ~ExternalSession() override {
    if (alive_) proc_.write_line("BYE");
  }

  const std::string& name() const override { return name_; }
  bool alive() const override { return alive_; }

  EvalOutcome eval(const Term& t) override {
    if (!alive_) return {EvalOutcome::Kind::kError, std::nullopt, "session closed"};
    if (!proc_.write_line("EVAL " + render_term(t))) {
      alive_ = false;
      return {EvalOutcome::Kind::kError, std::nullopt, "IUT closed its input"};
    }
    auto reply = proc_.read_line(timeout_ms_);
    if (!reply) {
      alive_ = false;
      return {EvalOutcome::Kind::kError, std::nullopt, "IUT crashed or timed out"};
    }
    return detail::parse_response(*reply, sig_);
  }

 private:
  const Signature& sig_;
  Subprocess proc_;
  int timeout_ms_;
  std::string name_;
  bool alive_ = true;
};

class ExternalAdapter : public IutAdapter {
 public:
  ExternalAdapter(const Specification& spec, std::string command, int timeout_ms)
      : spec_(spec), command_(std::move(command)), timeout_ms_(timeout_ms) {}

  std::unique_ptr<IutSession> open() const override {
    return std::make_unique<ExternalSession>(spec_.signature, command_, timeout_ms_);
  }
  std::string describe() const override { return "exec:" + command_; }
  const Specification& spec() const override { return spec_; }

 private:
  Specification spec_;
  std::string command_;
  int timeout_ms_;
};

}  // namespace

std::unique_ptr<IutAdapter> make_external_adapter(const Specification& spec, const std::string& command,
                                                  int timeout_ms) {
  return std::make_unique<ExternalAdapter>(spec, command, timeout_ms);
}

}  // namespace axiomtest
