"""Grayscale image and label-map I/O.

Images travel through the pipeline as 2-D float64 arrays with intensities
in [0, 255]; quantization to 8 bits happens only when writing PGM. Three
on-disk formats:

* PGM, binary P5 or ASCII P2, maxval <= 255 (read), P5 maxval 255 (write).
* Label maps: `labels <width> <height>` then <height> lines of <width>
  space-separated integers.
* Raw dumps: `rawgray <width> <height>` then <height> lines of <width>
  floats written with repr, so float64 values round-trip exactly.
"""

from __future__ import annotations

import numpy as np

GrayImage = np.ndarray  # float64, shape (height, width)
LabelMap = np.ndarray  # int64, shape (height, width)


class ImageFormatError(ValueError):
    """Malformed image or label-map file."""


def as_image(data) -> GrayImage:
    arr = np.asarray(data, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"image must be 2-D, got shape {arr.shape}")
    return arr


def _tokenize_pgm_header(buf: bytes):
    """Yield (token, next_pos) over whitespace/comment-separated header fields."""
    pos = 0
    while True:
        while pos < len(buf) and buf[pos : pos + 1].isspace():
            pos += 1
        if pos < len(buf) and buf[pos : pos + 1] == b"#":
            while pos < len(buf) and buf[pos] != ord("\n"):
                pos += 1
            continue
        if pos >= len(buf):
            raise ImageFormatError("malformed PGM header: unexpected end of file")
        start = pos
        while pos < len(buf) and not buf[pos : pos + 1].isspace():
            pos += 1
        yield buf[start:pos].decode("ascii", "replace"), pos


def read_pgm(path) -> GrayImage:
    """Read a P5 (binary) or P2 (ASCII) PGM with maxval <= 255."""
    with open(path, "rb") as fh:
        buf = fh.read()

    fields = _tokenize_pgm_header(buf)
    magic, _ = next(fields)
    if magic not in ("P5", "P2"):
        raise ImageFormatError(f"malformed PGM header: bad magic {magic!r}")
    try:
        width, _ = next(fields)
        height, _ = next(fields)
        maxval, data_pos = next(fields)
        width, height, maxval = int(width), int(height), int(maxval)
    except ImageFormatError:
        raise
    except ValueError:
        raise ImageFormatError("malformed PGM header: non-integer dimension") from None
    if width <= 0 or height <= 0:
        raise ImageFormatError(f"malformed PGM header: bad dimensions {width}x{height}")
    if maxval > 255:
        raise ImageFormatError(f"unsupported maxval {maxval} (must be <= 255)")
    if maxval <= 0:
        raise ImageFormatError(f"malformed PGM header: bad maxval {maxval}")

    n = width * height
    if magic == "P5":
        # exactly one whitespace byte separates maxval from the raster
        data = buf[data_pos + 1 :]
        if len(data) < n:
            raise ImageFormatError(f"truncated PGM data: expected {n} bytes, got {len(data)}")
        samples = np.frombuffer(data[:n], dtype=np.uint8)
    else:
        tokens = buf[data_pos:].split()
        if len(tokens) < n:
            raise ImageFormatError(f"truncated PGM data: expected {n} samples, got {len(tokens)}")
        try:
            samples = np.array([int(t) for t in tokens[:n]], dtype=np.int64)
        except ValueError:
            raise ImageFormatError("malformed PGM data: non-integer sample") from None
    if samples.max(initial=0) > maxval or samples.min(initial=0) < 0:
        raise ImageFormatError(f"malformed PGM data: sample outside [0, {maxval}]")
    return samples.reshape(height, width).astype(np.float64)


def quantize(img: GrayImage) -> np.ndarray:
    """Clip to [0, 255] and round half-up to uint8 (the write_pgm convention)."""
    return np.floor(np.clip(img, 0.0, 255.0) + 0.5).astype(np.uint8)


def write_pgm(img: GrayImage, path) -> None:
    """Write a binary P5 PGM; samples are clipped and rounded half-up."""
    img = as_image(img)
    h, w = img.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        fh.write(quantize(img).tobytes())


def write_labelmap(labels: LabelMap, path) -> None:
    labels = np.asarray(labels)
    h, w = labels.shape
    with open(path, "w") as fh:
        fh.write(f"labels {w} {h}\n")
        for row in labels:
            fh.write(" ".join(str(int(v)) for v in row))
            fh.write("\n")


def read_labelmap(path) -> LabelMap:
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 3 or header[0] != "labels":
            raise ImageFormatError("malformed label map header")
        try:
            w, h = int(header[1]), int(header[2])
        except ValueError:
            raise ImageFormatError("malformed label map header: non-integer size") from None
        tokens = fh.read().split()
    if len(tokens) != w * h:
        raise ImageFormatError(
            f"label map says {w}x{h} ({w * h} labels) but {len(tokens)} labels present"
        )
    try:
        labels = np.array([int(t) for t in tokens], dtype=np.int64)
    except ValueError:
        raise ImageFormatError("malformed label map: non-integer label") from None
    return labels.reshape(h, w)


def write_raw(img: GrayImage, path) -> None:
    """Write the lossless real-valued dump format (exact float64 round trip)."""
    img = as_image(img)
    h, w = img.shape
    with open(path, "w") as fh:
        fh.write(f"rawgray {w} {h}\n")
        for row in img:
            fh.write(" ".join(repr(float(v)) for v in row))
            fh.write("\n")


def read_raw(path) -> GrayImage:
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 3 or header[0] != "rawgray":
            raise ImageFormatError("malformed raw dump header")
        try:
            w, h = int(header[1]), int(header[2])
        except ValueError:
            raise ImageFormatError("malformed raw dump header: non-integer size") from None
        tokens = fh.read().split()
    if len(tokens) != w * h:
        raise ImageFormatError(
            f"raw dump says {w}x{h} ({w * h} samples) but {len(tokens)} samples present"
        )
    try:
        samples = np.array([float(t) for t in tokens], dtype=np.float64)
    except ValueError:
        raise ImageFormatError("malformed raw dump: non-numeric sample") from None
    return samples.reshape(h, w)


def read_image(path) -> GrayImage:
    """Read either format, sniffing the header (P5/P2 PGM or rawgray dump)."""
    with open(path, "rb") as fh:
        head = fh.read(8)
    if head[:2] in (b"P5", b"P2"):
        return read_pgm(path)
    if head.startswith(b"rawgray"):
        return read_raw(path)
    raise ImageFormatError(f"unrecognized image format in {path}")
