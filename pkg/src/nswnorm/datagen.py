"""Seeded synthetic corpus generator.

Builds labeled sentences by filling carrier templates with generated
non-standard words.  Every sentence carries three gold artifacts kept
consistent by construction: BIO labels (from the generator, never from
tagging), the written sentence, and the spoken sentence computed through
the expanders themselves, so tagger evaluation is independent of expander
bugs and end-to-end evaluation only measures tagging mistakes.

Each NSW class gets its own disambiguating context words (e.g. NDAY after
"ngày", NFRC after "chiếm", NSCR after "tỷ số") so the tag is learnable
from the token window, mirroring how real text disambiguates "3/4".
"""

from __future__ import annotations

import random

from .corpus import LabeledSentence
from .errors import ValidationError
from .expanders import expand
from .preprocess import tokenize
from .resources import Resources, load_resources
from .taxonomy import NswSpan, Tag, bio_decode, bio_encode

# group mix on generated NSW instances: Number/Letter/Other
GROUP_PROBS = ((0.5650, "number"), (0.3642, "letter"), (0.0708, "other"))

_NUMBER_TAG_WEIGHTS = (
    (Tag.NNUM, 22),
    (Tag.NDAY, 14),
    (Tag.NDAT, 12),
    (Tag.NTIM, 10),
    (Tag.NDIG, 8),
    (Tag.NPER, 8),
    (Tag.NRNG, 7),
    (Tag.NMON, 6),
    (Tag.NSCR, 5),
    (Tag.NFRC, 4),
    (Tag.NVER, 2),
    (Tag.NQUA, 2),
)
_LETTER_TAG_WEIGHTS = ((Tag.LABB, 40), (Tag.LWRD, 35), (Tag.LSEQ, 25))
_OTHER_TAG_WEIGHTS = (
    (Tag.MONEY, 40),
    (Tag.MEA, 35),
    (Tag.ROMA, 15),
    (Tag.URLE, 10),
)

# per-tag context cues; pre-word pools are pairwise disjoint across tags
_PRE = {
    Tag.NNUM: ("gần", "có", "tổng cộng", "đạt", "ghi nhận"),
    Tag.NDIG: ("gọi số", "số điện thoại", "bấm số", "số máy"),
    Tag.NDAY: ("ngày", "sáng ngày", "tối ngày", "hôm"),
    Tag.NDAT: ("ngày", "vào ngày", "trưa ngày"),
    Tag.NMON: ("suốt", "trong", "cuối", "đầu"),
    Tag.NQUA: ("doanh thu", "kết quả", "báo cáo"),
    Tag.NTIM: ("lúc", "vào lúc", "đúng"),
    Tag.NPER: ("tăng", "giảm", "tương đương"),
    Tag.NFRC: ("chiếm", "hơn", "gấp"),
    Tag.NSCR: ("tỷ số", "thắng", "hòa", "dẫn trước"),
    Tag.NRNG: ("từ", "khoảng", "kéo dài"),
    Tag.NVER: ("phiên bản", "bản"),
    Tag.LABB: ("chủ tịch", "trường", "đại diện", "cán bộ", "lãnh đạo"),
    Tag.LWRD: ("mạng", "dịch", "ứng dụng", "cầu thủ", "phần mềm"),
    Tag.LSEQ: ("kênh", "đài", "trên sóng", "chỉ số"),
    Tag.MONEY: ("giá", "trị giá", "mức giá", "thu về"),
    Tag.MEA: ("nặng", "dài", "nhiệt độ", "quãng đường", "tốc độ"),
    Tag.ROMA: ("thế kỷ", "chương", "vòng", "lần thứ"),
    Tag.URLE: ("truy cập", "địa chỉ", "theo dõi"),
}
_POST = {
    Tag.NNUM: ("ca", "người", "trường hợp", ""),
    Tag.NDAY: ("", "tới"),
    Tag.NFRC: ("số xe", "dân số", "diện tích"),
    Tag.NRNG: ("người", "ngày", ""),
    Tag.NQUA: ("vừa qua", "tăng mạnh"),
    Tag.LABB: ("cho biết", "thông báo", ""),
    Tag.MEA: ("", "so với trước"),
}

_FILLERS = (
    "thời tiết hôm nay rất đẹp",
    "người dân vui mừng",
    "các chuyên gia nhận định",
    "theo báo cáo mới nhất",
    "tình hình ổn định",
    "nhiều người quan tâm",
    "thị trường sôi động",
    "ban tổ chức thông báo",
)

_LABB_POOL = (
    "UBND", "THPT", "THCS", "ĐH", "CLB", "HLV", "VN", "TQ", "HN", "ĐT",
    "GS", "TS", "BS", "PCCC", "BHYT", "HĐND", "CSGT",
)
_LWRD_POOL = (
    "Covid-19", "Facebook", "internet", "virus", "taxi", "video", "camera",
    "robot", "game", "online", "smartphone", "Google", "YouTube", "TikTok",
    "laptop", "vaccine", "Ronaldo", "Messi",
)
_LSEQ_POOL = (
    "VTV", "VOV", "HTV", "CNN", "BBC", "MTV", "GDP", "FPT", "VNG", "AFC",
    "VTV3", "HTV7",
)
_URLE_POOL = (
    "#anhkhanh", "#hanoi", "#xuanhe", "#traxanh", "#muaxuan",
    "xuanthanh@gmail.com", "baoxuan@gmail.com", "lienhe@nhatrang",
)
_ROMA_POOL = ("I", "II", "III", "IV", "V", "VI", "X", "XX", "XXI", "XIX")
_MEA_UNITS = ("kg", "km", "m2", "km/h", "oC", "g", "l", "ha", "cm", "GB", "MW")

_N_SLOT_WEIGHTS = ((0, 6), (1, 30), (2, 34), (3, 20), (4, 10))


def _pick(rng: random.Random, weighted: tuple) -> object:
    values = [v for v, _ in weighted]
    weights = [w for _, w in weighted]
    return rng.choices(values, weights=weights, k=1)[0]


def _gen_nnum(rng: random.Random) -> list[str]:
    kind = rng.choices("plain space dot decimal negative".split(), (45, 15, 15, 20, 5))[0]
    if kind == "plain":
        return [str(rng.randint(2, 999999))]
    if kind == "space":
        return f"{rng.randint(10, 999) * 1000:,}".replace(",", " ").split(" ")
    if kind == "dot":
        return [f"{rng.randint(10, 999) * 1000:,}".replace(",", ".")]
    if kind == "decimal":
        return [f"{rng.randint(0, 99)},{rng.randint(1, 9)}"]
    return [f"-{rng.randint(1, 50)}"]


def _gen_ndig(rng: random.Random) -> list[str]:
    digits = lambda k: "".join(str(rng.randint(0, 9)) for _ in range(k))
    kind = rng.choices("solid dotted split plus".split(), (35, 25, 25, 15))[0]
    if kind == "solid":
        return ["0" + digits(9)]
    if kind == "dotted":
        return [f"0{digits(3)}.{digits(4)}.{digits(2)}"]
    if kind == "split":
        return ["0" + digits(3), digits(3), digits(3)]
    return ["+84" + digits(9)]


def _gen_nday(rng: random.Random) -> list[str]:
    sep = rng.choices("/-.", (80, 15, 5))[0]
    return [f"{rng.randint(1, 31)}{sep}{rng.randint(1, 12)}"]


def _gen_ndat(rng: random.Random) -> list[str]:
    d, m, y = rng.randint(1, 28), rng.randint(1, 12), rng.randint(1990, 2030)
    kind = rng.choices("full padded dotted dayrange crossrange fullrange".split(),
                       (40, 15, 10, 15, 10, 10))[0]
    if kind == "full":
        return [f"{d}/{m}/{y}"]
    if kind == "padded":
        return [f"{d:02d}/{m:02d}/{y}"]
    if kind == "dotted":
        return [f"{d}.{m}.{y}"]
    if kind == "dayrange":
        return [f"{d}-{min(d + rng.randint(1, 3), 31)}/{m}/{y}"]
    if kind == "crossrange":
        m2 = min(m + 1, 12)
        return [f"{d}/{m}-{rng.randint(1, 28)}/{m2}/{y}"]
    return [f"{d}/{m}/{y}-{rng.randint(1, 28)}/{rng.randint(1, 12)}/{y + 1}"]


def _gen_nmon(rng: random.Random) -> list[str]:
    return [f"{rng.randint(1, 12)}/{rng.randint(1990, 2030)}"]


def _gen_nqua(rng: random.Random) -> list[str]:
    q = ("I", "II", "III", "IV", "1", "2", "3", "4")[rng.randint(0, 7)]
    body = q if rng.random() < 0.3 else f"{q}/{rng.randint(2015, 2025)}"
    return [rng.choice(("Quý", "quý")), body]


def _gen_ntim(rng: random.Random) -> list[str]:
    # no minutes-only "11'" form here: its trailing apostrophe would be
    # peeled by the tokenizer, so it cannot survive as a single token
    h, m = rng.randint(0, 23), rng.randint(0, 59)
    kind = rng.choices("hm h colon range".split(), (40, 20, 20, 20))[0]
    if kind == "hm":
        return [f"{h}h{m:02d}"]
    if kind == "h":
        return [f"{h}h"]
    if kind == "colon":
        return [f"{h}:{m:02d}"]
    return [f"{h}h-{min(h + rng.randint(1, 3), 23)}h{m:02d}"]


def _gen_nper(rng: random.Random) -> list[str]:
    kind = rng.choices("int decimal range".split(), (50, 30, 20))[0]
    if kind == "int":
        return [f"{rng.randint(1, 100)}%"]
    if kind == "decimal":
        return [f"{rng.randint(0, 99)},{rng.randint(1, 9)}%"]
    lo = rng.randint(1, 50)
    return [f"{lo}-{lo + rng.randint(1, 30)}%"]


def _gen_nfrc(rng: random.Random) -> list[str]:
    b = rng.randint(2, 12)
    return [f"{rng.randint(1, b - 1)}/{b}"]


def _gen_nscr(rng: random.Random) -> list[str]:
    return [f"{rng.randint(0, 9)}-{rng.randint(0, 9)}"]


def _gen_nrng(rng: random.Random) -> list[str]:
    if rng.random() < 0.25:
        y = rng.randint(1990, 2025)
        return [f"{y}-{y + rng.randint(1, 10)}"]
    lo = rng.randint(1, 95)
    return [f"{lo}-{lo + rng.randint(1, 20)}"]


def _gen_nver(rng: random.Random) -> list[str]:
    parts = [str(rng.randint(0, 12)) for _ in range(rng.randint(2, 3))]
    return [".".join(parts)]


def _gen_money(rng: random.Random) -> list[str]:
    amount = str(rng.randint(1, 999))
    grouped = f"{rng.randint(10, 900) * 1000:,}".replace(",", ".")
    return [rng.choice((
        f"{amount}$", f"${amount}", f"{amount}USD", f"{amount}€",
        f"{grouped}đ", f"{grouped}VNĐ",
    ))]


def _gen_mea(rng: random.Random) -> list[str]:
    unit = rng.choice(_MEA_UNITS)
    if rng.random() < 0.2:
        return [f"{rng.randint(0, 99)},{rng.randint(1, 9)}{unit}"]
    return [f"{rng.randint(1, 500)}{unit}"]


_SURFACE_GENERATORS = {
    Tag.NNUM: _gen_nnum,
    Tag.NDIG: _gen_ndig,
    Tag.NDAY: _gen_nday,
    Tag.NDAT: _gen_ndat,
    Tag.NMON: _gen_nmon,
    Tag.NQUA: _gen_nqua,
    Tag.NTIM: _gen_ntim,
    Tag.NPER: _gen_nper,
    Tag.NFRC: _gen_nfrc,
    Tag.NSCR: _gen_nscr,
    Tag.NRNG: _gen_nrng,
    Tag.NVER: _gen_nver,
    Tag.MONEY: _gen_money,
    Tag.MEA: _gen_mea,
}
_POOLS = {
    Tag.LABB: _LABB_POOL,
    Tag.LWRD: _LWRD_POOL,
    Tag.LSEQ: _LSEQ_POOL,
    Tag.ROMA: _ROMA_POOL,
    Tag.URLE: _URLE_POOL,
}


def _gen_surface(rng: random.Random, tag: Tag) -> list[str]:
    if tag in _POOLS:
        return [rng.choice(_POOLS[tag])]
    return _SURFACE_GENERATORS[tag](rng)


def _pick_tag(rng: random.Random) -> Tag:
    group = rng.choices(
        [g for _, g in GROUP_PROBS], [p for p, _ in GROUP_PROBS]
    )[0]
    table = {
        "number": _NUMBER_TAG_WEIGHTS,
        "letter": _LETTER_TAG_WEIGHTS,
        "other": _OTHER_TAG_WEIGHTS,
    }[group]
    return _pick(rng, table)


def detokenize(tokens: list[str]) -> str:
    """Inverse of tokenize for generated sentences: sentence punctuation
    attaches to the preceding token, everything else is space-joined."""
    out = ""
    for token in tokens:
        if out and token in {",", ".", "!", "?", ";", ":", "…"}:
            out += token
        else:
            out += (" " if out else "") + token
    return out


def _capitalize(word: str) -> str:
    return word[0].upper() + word[1:] if word else word


class _SentenceBuilder:
    def __init__(self) -> None:
        self.tokens: list[str] = []
        self.labels: list[str] = []
        self.spoken: list[str] = []
        self.spans: list[NswSpan] = []

    def words(self, words: list[str]) -> None:
        self.tokens.extend(words)
        self.labels.extend("O" for _ in words)
        self.spoken.extend(words)

    def slot(self, tag: Tag, surface_tokens: list[str], spoken_words: tuple) -> None:
        start = len(self.tokens)
        self.tokens.extend(surface_tokens)
        self.labels.append(f"B-{tag.value}")
        self.labels.extend(f"I-{tag.value}" for _ in surface_tokens[1:])
        self.spoken.extend(spoken_words)
        self.spans.append(
            NswSpan(tag, start, start + len(surface_tokens) - 1, " ".join(surface_tokens))
        )


def _build_sentence(rng: random.Random, resources: Resources) -> tuple[LabeledSentence, str, str]:
    n_slots = _pick(rng, _N_SLOT_WEIGHTS)
    builder = _SentenceBuilder()
    clauses: list[tuple[str, ...]] = []
    if n_slots == 0:
        clauses.append(("filler",))
    else:
        clauses.extend(("slot",) for _ in range(int(n_slots)))
        if rng.random() < 0.25:
            clauses.insert(rng.randint(0, len(clauses)), ("filler",))
    for ci, kind in enumerate(clauses):
        if ci:
            builder.words([","])
        if kind[0] == "filler":
            builder.words(rng.choice(_FILLERS).split())
            continue
        tag = _pick_tag(rng)
        surface = _gen_surface(rng, tag)
        spoken = expand(" ".join(surface), tag, resources)
        if spoken.fallback:
            raise RuntimeError(f"unexpandable generated {tag.value}: {surface!r}")
        builder.words(rng.choice(_PRE[tag]).split())
        builder.slot(tag, surface, spoken.words)
        post = rng.choice(_POST.get(tag, ("",)))
        if post:
            builder.words(post.split())
    builder.tokens[0] = _capitalize(builder.tokens[0])
    builder.spoken[0] = _capitalize(builder.spoken[0])
    candidate = builder.tokens + ["."]
    if tokenize(detokenize(candidate)).texts != candidate:
        builder.words(["này"])
        candidate = builder.tokens + ["."]
        if tokenize(detokenize(candidate)).texts != candidate:
            raise RuntimeError(f"tokenization round-trip failed: {candidate!r}")
    builder.words(["."])
    if bio_decode(builder.labels) != builder.spans:
        raise RuntimeError(f"BIO round-trip failed: {builder.labels!r}")
    if bio_encode(builder.spans, len(builder.tokens)) != builder.labels:
        raise RuntimeError(f"BIO re-encode failed: {builder.spans!r}")
    written = detokenize(builder.tokens)
    spoken = " ".join(w for w in builder.spoken if w)
    return (builder.tokens, builder.labels), written, spoken


def generate_synthetic_corpus(
    seed: int, size: int, resources: Resources | None = None
) -> tuple[list[LabeledSentence], list[tuple[str, str]]]:
    """Deterministic labeled corpus + parallel written/spoken pairs."""
    if size < 1:
        raise ValidationError(f"size must be >= 1, got {size}")
    if resources is None:
        resources = load_resources()
    rng = random.Random(seed)
    corpus: list[LabeledSentence] = []
    pairs: list[tuple[str, str]] = []
    for _ in range(size):
        labeled, written, spoken = _build_sentence(rng, resources)
        corpus.append(labeled)
        pairs.append((written, spoken))
    return corpus, pairs
