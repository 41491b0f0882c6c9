#!/usr/bin/env python3
"""
{P5, co-P5}-serbest graf araçları - ana uygulama

Çıkış kodları: 0 üye / geçerli, 1 üye değil / geçersiz / ön koşul sağlanmadı,
2 biçim, sertifika, dosya veya kullanım hatası.
"""
import sys
import asyncio
import argparse
import logging
from typing import List, Optional

from config.settings import DEFAULT_FORMAT, DEFAULT_SEED, ENUM_MAX_N, ENUM_WORKERS, LOG_LEVEL
from decomposition.divide import find_split_divide
from decomposition.structure import build_structure_partition
from decomposition.tree import RecognitionResult, decompose
from graphs.detect import is_split
from graphs.errors import ConsistencyError, PreconditionError
from toolkit.certificates import (
    CertificateError,
    divide_document,
    dumps,
    loads,
    recognition_document,
    structure_document,
    verify_certificate,
)
from toolkit.enumeration import MODES, EnumerationRunner
from toolkit.formats import FORMATS, FormatError, format_graph, read_graph
from toolkit.generator import KINDS, GraphGenerator
from utils.logger import LoggingTimer, set_level, setup_logger

# Global logger
logger = setup_logger(__name__)

LIBRARY_PACKAGES = ("graphs", "decomposition", "toolkit")

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_ERROR = 2


def configure_logging(quiet: bool) -> None:
    """Kütüphane logger'larını kur; --quiet ise yalnızca uyarılar gösterilir"""
    level = logging.WARNING if quiet else LOG_LEVEL.upper()
    for name in (__name__,) + LIBRARY_PACKAGES:
        set_level(setup_logger(name), level)


def write_text(path: str, text: str) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)
    logger.info(f"Dosyaya yazıldı: {path}")


async def run_recognize(args: argparse.Namespace) -> int:
    """
    Grafı tanı; üye ise ayrıştırma ağacı, değilse tanık üret

    Args:
        args: Komut satırı argümanları

    Returns:
        int: Çıkış kodu
    """
    graph = read_graph(args.input, args.format)
    result = decompose(graph)
    doc = recognition_document(result)

    if args.output:
        write_text(args.output, dumps(doc) + "\n")
    if args.json:
        print(dumps(doc))
    elif result.is_member:
        print(f"üye: n={graph.n}, m={graph.edge_count}")
    else:
        print(f"üye değil: {result.witness.pattern.value} {list(result.witness.vertices)}")
    return EXIT_OK if result.is_member else EXIT_REJECTED


async def run_verify(args: argparse.Namespace) -> int:
    """
    Sertifikayı grafa karşı denetle

    Returns:
        int: Geçerliyse 0, değilse 1
    """
    graph = read_graph(args.input, args.format)
    with open(args.cert, 'rb') as f:
        doc = loads(f.read())

    violations = verify_certificate(graph, doc)
    if not violations:
        print(f"geçerli: {doc['kind']}")
        return EXIT_OK

    print(f"geçersiz: {len(violations)} ihlal")
    for violation in violations:
        print(f"  {violation}")
    return EXIT_REJECTED


async def run_generate(args: argparse.Namespace) -> int:
    """
    Tohumlu bir sınıf üyesi ve sertifikasını üret

    Returns:
        int: Çıkış kodu
    """
    generator = GraphGenerator(seed=args.seed)
    graph, tree = generator.generate(args.kind, args.n)
    text = format_graph(graph, args.format)
    doc = recognition_document(RecognitionResult(tree=tree))

    if args.output:
        write_text(args.output, text)
    else:
        sys.stdout.write(text)
    if args.cert:
        write_text(args.cert, dumps(doc) + "\n")
    if args.json:
        print(dumps(doc))
    return EXIT_OK


async def run_enumerate(args: argparse.Namespace) -> int:
    """
    n <= N için tüm etiketli grafları tara

    Returns:
        int: İhlal yoksa 0, varsa 1; N sınırı aşıyorsa 2
    """
    if args.n > ENUM_MAX_N:
        logger.error(f"--n en fazla {ENUM_MAX_N} olabilir: {args.n}")
        return EXIT_ERROR

    runner = EnumerationRunner(
        n_max=args.n,
        mode=args.mode,
        workers=args.workers,
        show_progress=not args.quiet,
    )
    report = await runner.run()
    text = dumps(report)

    if args.output:
        write_text(args.output, text + "\n")
    else:
        print(text)
    return EXIT_REJECTED if report["violations"] else EXIT_OK


async def run_divide(args: argparse.Namespace) -> int:
    """
    Asal bir sınıf üyesinde split bölücü bul; graf split ise split bölüşünü ver

    Returns:
        int: Çıkış kodu
    """
    graph = read_graph(args.input, args.format)
    divide = find_split_divide(graph)
    split = is_split(graph) if divide is None else None
    doc = divide_document(divide, split)

    if args.json:
        print(dumps(doc))
    elif divide is None:
        print(f"split: klik={sorted(split.clique)}, bağımsız={sorted(split.stable)}")
    else:
        print(
            f"bölücü ({divide.side.value}): A={sorted(divide.a)}, B={sorted(divide.b)}, "
            f"C={sorted(divide.c)}, L={sorted(divide.l)}, T={sorted(divide.t)}"
        )
    return EXIT_OK


async def run_structure(args: argparse.Namespace) -> int:
    """
    co-C4 içeren asal bir grafın yapı bölüşünü oluştur

    Returns:
        int: Çıkış kodu
    """
    graph = read_graph(args.input, args.format)
    partition = build_structure_partition(graph)

    if args.json:
        print(dumps(structure_document(partition)))
    else:
        xs = ", ".join(f"X{i}={sorted(s)}" for i, s in enumerate(partition.xs))
        ys = ", ".join(f"Y{i}={sorted(s)}" for i, s in enumerate(partition.ys))
        pivot = sorted(partition.pivot) if partition.pivot is not None else None
        print(f"yapı bölüşü: m={partition.m}; {xs}; {ys}; pivot={pivot}")
    return EXIT_OK


COMMANDS = {
    "recognize": run_recognize,
    "verify": run_verify,
    "generate": run_generate,
    "enumerate": run_enumerate,
    "divide": run_divide,
    "structure": run_structure,
}


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """
    Komut satırı argümanlarını ayrıştır

    Returns:
        argparse.Namespace: Ayrıştırılmış argümanlar
    """
    parser = argparse.ArgumentParser(description="{P5, co-P5}-serbest graf tanıma ve ayrıştırma araçları")

    # Alt komutlar
    subparsers = parser.add_subparsers(dest="command", help="Komut")

    def add_input(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--input", required=True, help="Graf dosyası")
        sub.add_argument("--format", choices=FORMATS, default=DEFAULT_FORMAT, help="Dosya biçimi")

    def add_quiet(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--quiet", action="store_true", help="Yalnızca uyarı ve hataları logla")

    # 'recognize' komutu
    recognize_parser = subparsers.add_parser("recognize", help="Grafın sınıfa üyeliğini sına")
    add_input(recognize_parser)
    recognize_parser.add_argument("--json", action="store_true", help="Sertifikayı JSON olarak yazdır")
    recognize_parser.add_argument("--output", help="Sertifikayı dosyaya yaz")
    add_quiet(recognize_parser)

    # 'verify' komutu
    verify_parser = subparsers.add_parser("verify", help="Sertifikayı grafa karşı denetle")
    add_input(verify_parser)
    verify_parser.add_argument("--cert", required=True, help="Sertifika dosyası (JSON)")
    add_quiet(verify_parser)

    # 'generate' komutu
    generate_parser = subparsers.add_parser("generate", help="Tohumlu rastgele sınıf üyesi üret")
    generate_parser.add_argument("--kind", choices=KINDS, required=True, help="Üretim türü")
    generate_parser.add_argument("--n", type=int, required=True, help="Köşe sayısı")
    generate_parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Rastgelelik tohumu")
    generate_parser.add_argument("--format", choices=FORMATS, default=DEFAULT_FORMAT, help="Çıktı biçimi")
    generate_parser.add_argument("--output", help="Grafı dosyaya yaz")
    generate_parser.add_argument("--cert", help="Sertifikayı dosyaya yaz")
    generate_parser.add_argument("--json", action="store_true", help="Sertifikayı JSON olarak yazdır")
    add_quiet(generate_parser)

    # 'enumerate' komutu
    enumerate_parser = subparsers.add_parser("enumerate", help="Küçük grafları kapsamlı tara")
    enumerate_parser.add_argument("--n", type=int, required=True, help=f"En büyük köşe sayısı (<= {ENUM_MAX_N})")
    enumerate_parser.add_argument("--mode", choices=MODES, default="agree", help="agree: çapraz doğrulama, count: sayım")
    enumerate_parser.add_argument("--workers", type=int, default=ENUM_WORKERS, help="İşçi süreç sayısı")
    enumerate_parser.add_argument("--output", help="Raporu dosyaya yaz")
    add_quiet(enumerate_parser)

    # 'divide' komutu
    divide_parser = subparsers.add_parser("divide", help="Split bölücü bul")
    add_input(divide_parser)
    divide_parser.add_argument("--json", action="store_true", help="Belgeyi JSON olarak yazdır")
    add_quiet(divide_parser)

    # 'structure' komutu
    structure_parser = subparsers.add_parser("structure", help="Yapı bölüşünü oluştur")
    add_input(structure_parser)
    structure_parser.add_argument("--json", action="store_true", help="Belgeyi JSON olarak yazdır")
    add_quiet(structure_parser)

    args = parser.parse_args(argv)

    # Komut verilmediyse yardım göster
    if not args.command:
        parser.print_help()
        sys.exit(EXIT_ERROR)

    return args


async def main(argv: Optional[List[str]] = None) -> int:
    """Ana uygulama fonksiyonu"""
    args = parse_arguments(argv)
    configure_logging(args.quiet)

    try:
        with LoggingTimer(logger, f"'{args.command}' komutu"):
            return await COMMANDS[args.command](args)
    except PreconditionError as e:
        print(f"ön koşul sağlanmadı: {e.reason}")
        logger.warning(f"Ön koşul sağlanmadı ({e.reason}): {e}")
        return EXIT_REJECTED
    except (FormatError, CertificateError) as e:
        logger.error(f"Girdi hatası: {e}")
        return EXIT_ERROR
    except OSError as e:
        logger.error(f"Dosya hatası: {e}")
        return EXIT_ERROR
    except ValueError as e:
        logger.error(f"Geçersiz argüman: {e}")
        return EXIT_ERROR
    except ConsistencyError as e:
        logger.critical(f"İç tutarlılık hatası: {e}")
        return EXIT_ERROR


if __name__ == "__main__":
    # Windows'ta asyncio event loop politikasını ayarla
    if sys.platform == 'win32':
        asyncio.set_event_loop_policy(asyncio.WindowsSelectorEventLoopPolicy())

    sys.exit(asyncio.run(main()))
