"""
{P5, co-P5}-serbest graf araçları için ayarlar ve yapılandırma parametreleri
"""
import os
from dotenv import load_dotenv

# .env dosyasını yükle (varsa)
load_dotenv()

# Dosya biçimleri
DEFAULT_FORMAT = os.getenv("DEFAULT_FORMAT", "graph6")  # graph6 veya edgelist

# Sertifika şeması
SCHEMA_VERSION = "p5free-certificate/1"

# Sayım ayarları
ENUM_MAX_N = int(os.getenv("ENUM_MAX_N", "7"))  # Kontrolsüz çalışmaya karşı üst sınır
ENUM_WORKERS = int(os.getenv("ENUM_WORKERS", "1"))  # 1 ise süreç havuzu kullanılmaz
ENUM_CHUNK_SIZE = int(os.getenv("ENUM_CHUNK_SIZE", "2048"))

# Üreteç ayarları
GENERATOR_LEAF_MEAN = float(os.getenv("GENERATOR_LEAF_MEAN", "4.0"))  # Yaprak boyutu (geometrik) ortalaması
GENERATOR_EDGE_PROB = float(os.getenv("GENERATOR_EDGE_PROB", "0.5"))  # Klik-bağımsız küme kenar olasılığı
DEFAULT_SEED = int(os.getenv("DEFAULT_SEED", "0"))

# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_FILE = os.getenv("LOG_FILE", "p5free.log")  # Boş ise dosyaya yazılmaz
