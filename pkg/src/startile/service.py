"""Stateless HTTP render service.

Plain stdlib http.server: ``POST /render`` takes a JSON object of config
keys and returns ``{svg, segment_count, warnings}``; ``GET /presets``
returns the built-in presets with provenance. Identical configs produce
bytewise-identical SVG through the service and the CLI. Invalid input gets
a 400 with ``{field, reason}``. When ``ui_dir`` is set, other GET paths
are served as static files (the explorer frontend).
"""

from __future__ import annotations

import json
import logging
import mimetypes
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .config import ConfigDoc, build_segments, collect_warnings, config_from_json, config_to_json
from .errors import (
    ConfigSyntaxError,
    EmptyPattern,
    InvalidParameter,
    MotifCapExceeded,
    ValidationError,
)
from .presets import list_presets
from .render import render_svg

log = logging.getLogger(__name__)


@dataclass
class RenderResponse:
    svg: bytes
    segment_count: int
    warnings: list[str]


def serve_render(doc: ConfigDoc) -> RenderResponse:
    """Render a config exactly as the CLI would; stateless."""
    segments = build_segments(doc)
    return RenderResponse(
        svg=render_svg(segments, doc.render),
        segment_count=len(segments.segments),
        warnings=collect_warnings(doc),
    )


_CORS = (
    ("Access-Control-Allow-Origin", "*"),
    ("Access-Control-Allow-Methods", "GET, POST, OPTIONS"),
    ("Access-Control-Allow-Headers", "Content-Type"),
)


class RenderHandler(BaseHTTPRequestHandler):
    ui_dir: Path | None = None
    protocol_version = "HTTP/1.1"

    def _send(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        for key, value in _CORS:
            self.send_header(key, value)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, payload: object) -> None:
        self._send(status, json.dumps(payload).encode("utf-8"), "application/json; charset=utf-8")

    def do_OPTIONS(self):
        self.send_response(204)
        for key, value in _CORS:
            self.send_header(key, value)
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        path = self.path.split("?", 1)[0]
        if path == "/presets":
            payload = [
                {
                    "name": p.name,
                    "provenance": p.provenance,
                    "notes": p.notes,
                    "config": config_to_json(p.config),
                }
                for p in list_presets()
            ]
            self._send_json(200, payload)
        elif self.ui_dir is not None:
            self._send_static(path)
        else:
            self._send_json(404, {"field": "path", "reason": f"no such endpoint: {path}"})

    def do_POST(self):
        path = self.path.split("?", 1)[0]
        if path != "/render":
            self._send_json(404, {"field": "path", "reason": f"no such endpoint: {path}"})
            return
        try:
            length = int(self.headers.get("Content-Length") or "0")
            payload = json.loads(self.rfile.read(length).decode("utf-8"))
        except (ValueError, UnicodeDecodeError):
            self._send_json(400, {"field": "body", "reason": "request body must be valid JSON"})
            return
        try:
            result = serve_render(config_from_json(payload))
        except ValidationError as exc:
            self._send_json(400, {"field": exc.field, "reason": exc.reason})
            return
        except ConfigSyntaxError as exc:
            self._send_json(400, {"field": exc.key or "config", "reason": exc.reason})
            return
        except (InvalidParameter, MotifCapExceeded, EmptyPattern) as exc:
            field = getattr(exc, "field", None) or "config"
            self._send_json(400, {"field": field, "reason": str(exc)})
            return
        self._send_json(
            200,
            {
                "svg": result.svg.decode("utf-8"),
                "segment_count": result.segment_count,
                "warnings": result.warnings,
            },
        )

    def _send_static(self, path: str) -> None:
        root = self.ui_dir.resolve()
        target = (root / path.lstrip("/")).resolve()
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file() or root not in target.parents and target != root:
            self._send_json(404, {"field": "path", "reason": f"no such file: {path}"})
            return
        ctype = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        self._send(200, target.read_bytes(), ctype)

    def log_message(self, fmt, *args):
        log.debug("%s %s", self.address_string(), fmt % args)


def make_server(
    host: str = "127.0.0.1", port: int = 0, ui_dir: str | Path | None = None
) -> ThreadingHTTPServer:
    """Build (but do not start) the threading HTTP server."""
    handler = type(
        "BoundRenderHandler",
        (RenderHandler,),
        {"ui_dir": Path(ui_dir) if ui_dir is not None else None},
    )
    return ThreadingHTTPServer((host, port), handler)


def run(host: str = "127.0.0.1", port: int = 8000, ui_dir: str | Path | None = None) -> None:
    """Serve until interrupted."""
    with make_server(host, port, ui_dir) as server:
        actual_port = server.server_address[1]
        print(f"render service listening on http://{host}:{actual_port}")
        if ui_dir is not None:
            print(f"serving explorer UI from {ui_dir}")
        try:
            server.serve_forever()
        except KeyboardInterrupt:
            pass
