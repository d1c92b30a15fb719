#include "ppm/channel.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <condition_variable>
#include <cstring>
#include <deque>
#include <thread>

namespace ppm {

namespace {

// --- in-process -------------------------------------------------------------

struct FrameQueue {
    std::mutex mutex;
    std::condition_variable cv;
    std::deque<Frame> frames;
    bool closed = false;

    void push(Frame f) {
        {
            std::lock_guard lock(mutex);
            frames.push_back(std::move(f));
        }
        cv.notify_one();
    }

    Frame pop(std::chrono::milliseconds timeout) {
        std::unique_lock lock(mutex);
        if (!cv.wait_for(lock, timeout, [&] { return !frames.empty() || closed; }))
            throw TransportError(TransportError::Kind::Timeout, "receive timed out");
        if (frames.empty())
            throw TransportError(TransportError::Kind::Closed, "peer endpoint destroyed");
        Frame f = std::move(frames.front());
        frames.pop_front();
        return f;
    }

    void close() {
        {
            std::lock_guard lock(mutex);
            closed = true;
        }
        cv.notify_all();
    }
};

class InprocChannel final : public Channel {
  public:
    InprocChannel(std::shared_ptr<FrameQueue> tx, std::shared_ptr<FrameQueue> rx)
        : tx_(std::move(tx)), rx_(std::move(rx)) {}

    ~InprocChannel() override { tx_->close(); }

    void send(const Frame& frame) override {
        // encode/decode keeps the in-process path byte-identical to TCP
        tx_->push(decode_frame(encode_frame(frame)));
    }

    Frame recv(std::chrono::milliseconds timeout) override { return rx_->pop(timeout); }

  private:
    std::shared_ptr<FrameQueue> tx_;
    std::shared_ptr<FrameQueue> rx_;
};

// --- TCP ----------------------------------------------------------------------

class Fd {
  public:
    Fd() = default;
    explicit Fd(int fd) : fd_(fd) {}
    Fd(Fd&& o) noexcept : fd_(o.fd_) { o.fd_ = -1; }
    Fd& operator=(Fd&& o) noexcept {
        if (this != &o) {
            reset();
            fd_ = o.fd_;
            o.fd_ = -1;
        }
        return *this;
    }
    Fd(const Fd&) = delete;
    Fd& operator=(const Fd&) = delete;
    ~Fd() { reset(); }

    int get() const { return fd_; }
    void reset() {
        if (fd_ >= 0) ::close(fd_);
        fd_ = -1;
    }

  private:
    int fd_ = -1;
};

void read_exact(int fd, std::uint8_t* out, std::size_t len,
                std::chrono::milliseconds timeout) {
    auto deadline = std::chrono::steady_clock::now() + timeout;
    std::size_t got = 0;
    while (got < len) {
        auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
            deadline - std::chrono::steady_clock::now());
        if (remaining.count() <= 0)
            throw TransportError(TransportError::Kind::Timeout, "receive timed out");
        struct pollfd pfd {fd, POLLIN, 0};
        int rc = ::poll(&pfd, 1, static_cast<int>(remaining.count()));
        if (rc == 0)
            throw TransportError(TransportError::Kind::Timeout, "receive timed out");
        if (rc < 0) throw TransportError(TransportError::Kind::Closed, "poll failed");
        ssize_t n = ::read(fd, out + got, len - got);
        if (n == 0)
            throw TransportError(TransportError::Kind::Closed, "connection closed by peer");
        if (n < 0) throw TransportError(TransportError::Kind::Closed, "read failed");
        got += static_cast<std::size_t>(n);
    }
}

void write_all(int fd, const std::uint8_t* data, std::size_t len) {
    std::size_t sent = 0;
    while (sent < len) {
        ssize_t n = ::write(fd, data + sent, len - sent);
        if (n <= 0) throw TransportError(TransportError::Kind::Closed, "write failed");
        sent += static_cast<std::size_t>(n);
    }
}

class TcpChannel final : public Channel {
  public:
    explicit TcpChannel(Fd fd) : fd_(std::move(fd)) {
        int one = 1;
        ::setsockopt(fd_.get(), IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
    }

    void send(const Frame& frame) override {
        Bytes wire = encode_frame(frame);
        write_all(fd_.get(), wire.data(), wire.size());
    }

    Frame recv(std::chrono::milliseconds timeout) override {
        Bytes wire(kFrameHeaderSize);
        read_exact(fd_.get(), wire.data(), wire.size(), timeout);
        std::size_t off = 14;
        std::uint64_t len = get_u64(wire, off);
        if (len > kMaxPayload)
            throw TransportError(TransportError::Kind::Oversize,
                                 "payload exceeds 2^32 bytes");
        wire.resize(kFrameHeaderSize + len);
        if (len > 0) read_exact(fd_.get(), wire.data() + kFrameHeaderSize, len, timeout);
        return decode_frame(wire);
    }

  private:
    Fd fd_;
};

// --- tap ----------------------------------------------------------------------

class TapChannel final : public Channel {
  public:
    TapChannel(std::unique_ptr<Channel> inner, FrameLog* log, bool is_first)
        : inner_(std::move(inner)), log_(log), is_first_(is_first) {}

    void send(const Frame& frame) override {
        if (log_) log_->record(is_first_, frame);
        inner_->send(frame);
    }

    Frame recv(std::chrono::milliseconds timeout) override { return inner_->recv(timeout); }

  private:
    std::unique_ptr<Channel> inner_;
    FrameLog* log_;
    bool is_first_;
};

}  // namespace

ChannelPair make_inproc_pair() {
    auto q1 = std::make_shared<FrameQueue>();
    auto q2 = std::make_shared<FrameQueue>();
    return {std::make_unique<InprocChannel>(q1, q2),
            std::make_unique<InprocChannel>(q2, q1)};
}

std::unique_ptr<Channel> tcp_listen(std::uint16_t port,
                                    std::chrono::milliseconds accept_timeout) {
    Fd listener(::socket(AF_INET, SOCK_STREAM, 0));
    if (listener.get() < 0)
        throw TransportError(TransportError::Kind::Connect, "socket creation failed");
    int one = 1;
    ::setsockopt(listener.get(), SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));

    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_ANY);
    addr.sin_port = htons(port);
    if (::bind(listener.get(), reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) < 0)
        throw TransportError(TransportError::Kind::Connect,
                             "bind failed on port " + std::to_string(port));
    if (::listen(listener.get(), 1) < 0)
        throw TransportError(TransportError::Kind::Connect, "listen failed");

    struct pollfd pfd {listener.get(), POLLIN, 0};
    int rc = ::poll(&pfd, 1, static_cast<int>(accept_timeout.count()));
    if (rc <= 0)
        throw TransportError(TransportError::Kind::Timeout, "no connection before timeout");
    Fd conn(::accept(listener.get(), nullptr, nullptr));
    if (conn.get() < 0)
        throw TransportError(TransportError::Kind::Connect, "accept failed");
    return std::make_unique<TcpChannel>(std::move(conn));
}

std::unique_ptr<Channel> tcp_connect(const std::string& host, std::uint16_t port,
                                     std::chrono::milliseconds timeout) {
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1)
        throw TransportError(TransportError::Kind::Connect, "invalid host address: " + host);

    auto deadline = std::chrono::steady_clock::now() + timeout;
    for (;;) {
        Fd fd(::socket(AF_INET, SOCK_STREAM, 0));
        if (fd.get() < 0)
            throw TransportError(TransportError::Kind::Connect, "socket creation failed");
        if (::connect(fd.get(), reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) == 0)
            return std::make_unique<TcpChannel>(std::move(fd));
        if (std::chrono::steady_clock::now() >= deadline)
            throw TransportError(TransportError::Kind::Connect,
                                 "connection refused: " + host + ":" + std::to_string(port));
        std::this_thread::sleep_for(std::chrono::milliseconds(50));
    }
}

void FrameLog::record(bool from_first, const Frame& frame) {
    FrameRecord rec{from_first, frame.proto, frame.kind, frame.round, frame.wire_size(), {}};
    if (capture_bytes_) rec.bytes = encode_frame(frame);
    std::lock_guard lock(mutex_);
    records_.push_back(std::move(rec));
}

std::vector<FrameRecord> FrameLog::snapshot() const {
    std::lock_guard lock(mutex_);
    return records_;
}

std::unique_ptr<Channel> with_tap(std::unique_ptr<Channel> inner, FrameLog* log,
                                  bool is_first) {
    return std::make_unique<TapChannel>(std::move(inner), log, is_first);
}

}  // namespace ppm
