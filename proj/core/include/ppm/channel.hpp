#pragma once

/// @file channel.hpp
/// Ordered, reliable frame channels: an in-process queue pair for local runs
/// and tests, and a TCP transport for two-process deployments. Both deliver
/// the same byte streams for the same protocol run and seed.

#include <chrono>
#include <memory>
#include <mutex>
#include <vector>

#include "ppm/transport.hpp"

namespace ppm {

class Channel {
  public:
    virtual ~Channel() = default;
    virtual void send(const Frame& frame) = 0;
    /// Blocks until a frame arrives; throws TransportError{Timeout} after
    /// `timeout` and TransportError{Closed} when the peer is gone.
    virtual Frame recv(std::chrono::milliseconds timeout) = 0;
};

struct ChannelPair {
    std::unique_ptr<Channel> first;
    std::unique_ptr<Channel> second;
};

/// Two endpoints of an in-process FIFO pair.
ChannelPair make_inproc_pair();

/// Accepts one connection on the port (IPv4 loopback or any-address bind).
std::unique_ptr<Channel> tcp_listen(std::uint16_t port, std::chrono::milliseconds accept_timeout);

/// Connects to a listening peer, retrying until the timeout elapses.
std::unique_ptr<Channel> tcp_connect(const std::string& host, std::uint16_t port,
                                     std::chrono::milliseconds timeout);

/// One observed frame. `from_first` is true for frames sent by the endpoint
/// the tap was attached to with that flag; the harness tags the System side
/// as first.
struct FrameRecord {
    bool from_first;
    ProtoId proto;
    MsgKind kind;
    std::uint64_t round;
    std::size_t wire_size;
    Bytes bytes;  // full encoded frame when capture_bytes was requested
};

/// Shared transcript of every frame sent through tapped endpoints.
class FrameLog {
  public:
    explicit FrameLog(bool capture_bytes = false) : capture_bytes_(capture_bytes) {}

    void record(bool from_first, const Frame& frame);
    std::vector<FrameRecord> snapshot() const;

  private:
    bool capture_bytes_;
    mutable std::mutex mutex_;
    std::vector<FrameRecord> records_;
};

/// Wraps a channel so every sent frame is appended to `log`.
std::unique_ptr<Channel> with_tap(std::unique_ptr<Channel> inner, FrameLog* log,
                                  bool is_first);

}  // namespace ppm
