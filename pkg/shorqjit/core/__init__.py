# Módulo core de ShorQJIT
