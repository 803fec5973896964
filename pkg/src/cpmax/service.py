"""Local HTTP+JSON service exposing the toolkit for scripting and the UI.

Single session: one network at a time.  Each mutation (PUT /network,
PUT /costs) builds a fresh immutable snapshot and swaps it in atomically,
so concurrent readers always see a consistent network/polynomial/costs
triple.  Graph caches live on the snapshot and are filled lazily under a
lock; costs changes keep them (the chamber geometry depends only on the
support family).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .chambers import adjacency_graph, chamber_membership, graph_to_json, newton_skeleton
from .errors import (
    DimensionMismatch,
    InvalidInput,
    LimitExceeded,
    NegativeCost,
    OnWall,
    TermBudgetExceeded,
    ToolkitError,
)
from .network import DEFAULT_CHAIN_CAP, ProjectNetwork, network_from_json, network_to_json
from .payloads import chamber_payload, eval_payload, whatif_payload
from .realise import eft_polynomial
from .serialize import dumps, format_rational, loads, parse_rational
from .tropical import poly_to_json
from .whatif import predict_transitions, ray_trace

DEFAULT_TERM_BUDGET = 60


class _GraphCache:
    """Lazy adjacency/newton graphs for one polynomial, lock-guarded."""

    def __init__(self, poly):
        self.poly = poly
        self._lock = threading.Lock()
        self._adjacency = None
        self._newton = None

    def adjacency(self):
        with self._lock:
            if self._adjacency is None:
                self._adjacency = adjacency_graph(self.poly)
            return self._adjacency

    def newton(self):
        with self._lock:
            if self._newton is None:
                self._newton = newton_skeleton(self.poly)
            return self._newton


class Snapshot:
    """One immutable session state.

    Cost changes produce a sibling snapshot sharing the graph cache, since
    the chamber geometry depends only on the support family.
    """

    def __init__(self, network: ProjectNetwork, poly, costs, cache=None):
        self.network = network
        self.poly = poly
        self.costs = tuple(costs)
        self._cache = cache if cache is not None else _GraphCache(poly)

    def with_costs(self, costs) -> "Snapshot":
        return Snapshot(self.network, self.poly, costs, cache=self._cache)

    def adjacency(self, budget: int):
        self._check_budget(budget)
        return self._cache.adjacency()

    def newton(self, budget: int):
        self._check_budget(budget)
        return self._cache.newton()

    def _check_budget(self, budget: int):
        terms = len(self.poly.support)
        if terms > budget:
            raise TermBudgetExceeded(terms, budget)


class ServiceState:
    def __init__(self, *, max_chains: int, max_terms: int):
        self.snapshot: Snapshot | None = None
        self.max_chains = max_chains
        self.max_terms = max_terms

    def load_network(self, obj) -> Snapshot:
        network = network_from_json(obj)
        poly = eft_polynomial(network, cap=self.max_chains)
        snap = Snapshot(network, poly, network.costs)
        self.snapshot = snap
        return snap

    def set_costs(self, costs) -> Snapshot:
        snap = self.snapshot
        if snap is None:
            raise LookupError("no network loaded")
        if len(costs) != snap.network.n:
            raise DimensionMismatch(
                f"{len(costs)} costs for {snap.network.n} activities",
                expected=snap.network.n,
                got=len(costs),
            )
        parsed = []
        for i, c in enumerate(costs, start=1):
            value = parse_rational(c)
            if value < 0:
                raise NegativeCost(i, cost=format_rational(value))
            parsed.append(value)
        new = snap.with_costs(parsed)
        self.snapshot = new
        return new


class _Handler(BaseHTTPRequestHandler):
    server_version = "cpmax/0.1"
    protocol_version = "HTTP/1.1"

    # Silence per-request logging; tests and desk use do not want it.
    def log_message(self, fmt, *args):  # noqa: A003
        pass

    @property
    def state(self) -> ServiceState:
        return self.server.state  # type: ignore[attr-defined]

    def _send(self, status: int, payload: dict):
        body = dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, PUT, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()
        self.wfile.write(body)

    def _body(self):
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise InvalidInput("empty request body")
        return loads(raw.decode("utf-8"))

    def _snapshot(self) -> Snapshot:
        snap = self.state.snapshot
        if snap is None:
            raise LookupError("no network loaded")
        return snap

    def _dispatch(self, method: str):
        path = self.path.split("?", 1)[0].rstrip("/") or "/"
        try:
            handler = {
                ("GET", "/network"): self._get_network,
                ("PUT", "/network"): self._put_network,
                ("PUT", "/costs"): self._put_costs,
                ("GET", "/eft"): self._get_eft,
                ("GET", "/adjacency"): self._get_adjacency,
                ("GET", "/newton"): self._get_newton,
                ("GET", "/chamber"): self._get_chamber,
                ("POST", "/whatif"): self._post_whatif,
            }.get((method, path))
            if handler is None:
                self._send(404, {"error": "NotFound", "message": f"no route {method} {path}"})
                return
            handler()
        except LookupError:
            self._send(404, {"error": "NoNetwork", "message": "no network loaded"})
        except DimensionMismatch as exc:
            self._send(409, exc.to_json())
        except (OnWall, LimitExceeded) as exc:
            self._send(422, exc.to_json())
        except InvalidInput as exc:
            self._send(400, exc.to_json())
        except ToolkitError as exc:
            self._send(422, exc.to_json())

    def do_GET(self):  # noqa: N802
        self._dispatch("GET")

    def do_PUT(self):  # noqa: N802
        self._dispatch("PUT")

    def do_POST(self):  # noqa: N802
        self._dispatch("POST")

    def do_OPTIONS(self):  # noqa: N802
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, PUT, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def _get_network(self):
        snap = self._snapshot()
        self._send(200, network_to_json(snap.network))

    def _put_network(self):
        snap = self.state.load_network(self._body())
        self._send(200, network_to_json(snap.network))

    def _put_costs(self):
        body = self._body()
        if not isinstance(body, dict) or "costs" not in body:
            raise InvalidInput("request body needs a 'costs' list")
        snap = self.state.set_costs(body["costs"])
        self._send(200, {"costs": [format_rational(c) for c in snap.costs]})

    def _get_eft(self):
        snap = self._snapshot()
        result = snap.poly.evaluate(snap.costs)
        payload = eval_payload(result, snap.costs)
        payload["polynomial"] = poly_to_json(snap.poly)
        self._send(200, payload)

    def _get_adjacency(self):
        snap = self._snapshot()
        self._send(200, graph_to_json(snap.adjacency(self.state.max_terms)))

    def _get_newton(self):
        snap = self._snapshot()
        self._send(200, graph_to_json(snap.newton(self.state.max_terms)))

    def _get_chamber(self):
        snap = self._snapshot()
        self._send(200, chamber_payload(chamber_membership(snap.poly, snap.costs)))

    def _post_whatif(self):
        snap = self._snapshot()
        body = self._body()
        if not isinstance(body, dict):
            raise InvalidInput("request body must be an object")
        try:
            activity = int(body["activity"])
            direction = body["direction"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput("request needs 'activity' and 'direction'") from exc
        if direction not in ("up", "down"):
            raise InvalidInput("direction must be 'up' or 'down'")
        if not 1 <= activity <= snap.network.n:
            raise DimensionMismatch(
                f"activity {activity} outside 1..{snap.network.n}",
                expected=snap.network.n,
                got=activity,
            )
        sign = 1 if direction == "up" else -1
        result = ray_trace(snap.poly, snap.costs, activity, sign)
        graph = snap.adjacency(self.state.max_terms)
        prediction = predict_transitions(
            snap.poly, result.start_argmax[0], activity, sign, graph=graph
        )
        self._send(200, whatif_payload(result, prediction))


def make_server(port: int = 0, *, network: ProjectNetwork | None = None,
                max_chains: int = DEFAULT_CHAIN_CAP,
                max_terms: int = DEFAULT_TERM_BUDGET) -> ThreadingHTTPServer:
    server = ThreadingHTTPServer(("127.0.0.1", port), _Handler)
    server.state = ServiceState(max_chains=max_chains, max_terms=max_terms)  # type: ignore[attr-defined]
    if network is not None:
        server.state.load_network(network_to_json(network))  # type: ignore[attr-defined]
    return server


def serve(port: int, *, network: ProjectNetwork | None = None,
          max_chains: int = DEFAULT_CHAIN_CAP,
          max_terms: int = DEFAULT_TERM_BUDGET):
    server = make_server(port, network=network, max_chains=max_chains,
                         max_terms=max_terms)
    host, actual_port = server.server_address[:2]
    print(f"serving on http://{host}:{actual_port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
